#include <random>

#include "doctest.h"

#include "support/generators.hpp"
#include "tedei/backend.hpp"

using namespace tedei;

TEST_SUITE("backend") {
  TEST_CASE("DL notation for each constructor") {
    CHECK(serializeDL(cx::some("foundIn", cx::atomic("DNA"))) == "∃foundIn.DNA");
    CHECK(serializeDL(cx::only("drives", cx::atomic("Car"))) == "∀drives.Car");
    CHECK(serializeDL(cx::min(3, "has", cx::atomic("Toppings"))) == "≥3 has.Toppings");
    CHECK(serializeDL(cx::max(2, "has", cx::top())) == "≤2 has.⊤");
    CHECK(serializeDL(cx::exactly(4, "has", cx::atomic("RightAngles"))) == "=4 has.RightAngles");
    CHECK(serializeDL(cx::has_value("livesIn", "Paris")) == "∃livesIn.{Paris}");
    CHECK(serializeDL(cx::has_self("loves")) == "∃loves.Self");
    CHECK(serializeDL(cx::complement(cx::some("isNativeToRegion", cx::top()))) == "¬∃isNativeToRegion.⊤");
    CHECK(serializeDL(cx::union_of({cx::atomic("Concave"), cx::atomic("Convex")})) == "Concave ⊔ Convex");
    CHECK(serializeDL(cx::some("p", cx::union_of({cx::atomic("A"), cx::atomic("B")}))) == "∃p.(A ⊔ B)");
  }

  TEST_CASE("axiom forms") {
    auto sub = Axiom::subClassOf(cx::atomic("Driver"), cx::some("drives", cx::atomic("Car")));
    CHECK(serializeDL(sub) == "Driver ⊑ ∃drives.Car");
    auto nd = Axiom::nonDefinitional(cx::intersection({cx::atomic("Quark"), cx::some("possess", cx::atomic("ColorCharge"))}));
    CHECK(serializeDL(nd) == "Quark ⊓ ∃possess.ColorCharge ⊑ ⊤");
    CHECK(parseDLAxiom("Quark ⊓ ∃possess.ColorCharge ⊑ ⊤").form == AxiomForm::NonDefinitional);
  }

  TEST_CASE("DL reader accepts the short spellings") {
    CHECK(serializeDL(parseDLExpr("¬∃isNativeToRegion")) == "¬∃isNativeToRegion.⊤");
    CHECK(serializeDL(parseDLExpr("≥3has.Toppings")) == "≥3 has.Toppings");
    CHECK(sameAxiom(parseDLAxiom("Adenine ⊑ ∃foundIn.DNA ⊓ PurineBase"),
                    parseDLAxiom("Adenine ⊑ PurineBase ⊓ ∃foundIn.DNA")));
    CHECK_THROWS_AS(parseDLExpr("∃.X"), Error);
    CHECK_THROWS_AS(parseDLAxiom("A ⊑"), Error);
    CHECK_THROWS_AS(parseDLExpr("(A ⊓ B"), Error);
  }

  TEST_CASE("DL round trip over random normalized expressions") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 1000; ++i) {
      auto e = normalize(tedei::testing::randomExpr(rng, 4));
      auto text = serializeDL(e);
      auto back = normalize(parseDLExpr(text));
      INFO(text);
      REQUIRE(structurallyEqual(e, back));
      REQUIRE(serializeDL(back) == text);
    }
  }

  TEST_CASE("JSON round trip over random axioms") {
    std::mt19937 rng(99);
    for (int i = 0; i < 500; ++i) {
      auto ax = normalize(tedei::testing::randomAxiom(rng, 3));
      ax.provenance.sentenceId = "s" + std::to_string(i);
      ax.provenance.lexicalizationIndex = static_cast<std::size_t>(i % 7);
      auto back = axiomFromJson(nlohmann::json::parse(axiomToJson(ax).dump()));
      REQUIRE(sameAxiom(ax, back));
      REQUIRE(back.provenance.sentenceId == ax.provenance.sentenceId);
      REQUIRE(back.provenance.lexicalizationIndex == ax.provenance.lexicalizationIndex);
      REQUIRE(exprToJson(exprFromJson(exprToJson(ax.lhs))) == exprToJson(ax.lhs));
    }
  }

  TEST_CASE("functional syntax") {
    auto ax = parseDLAxiom("InterestingPizza ⊑ Pizza ⊓ ≥3 has.Toppings");
    auto doc = serializeFunctional({ax}, "http://example.org/pizza");
    CHECK(doc.find("Ontology(<http://example.org/pizza>") != std::string::npos);
    CHECK(doc.find("Declaration(Class(:InterestingPizza))") != std::string::npos);
    CHECK(doc.find("Declaration(ObjectProperty(:has))") != std::string::npos);
    CHECK(doc.find("ObjectMinCardinality(3 :has :Toppings)") != std::string::npos);
    CHECK(functionalAxiom(parseDLAxiom("A ⊑ ≤2 p.⊤")) == "SubClassOf(:A ObjectMaxCardinality(2 :p))");
    CHECK(functionalAxiom(parseDLAxiom("A ⊑ ∃p.{Paris}")) == "SubClassOf(:A ObjectHasValue(:p :Paris))");
    CHECK(serializeFunctional({}, "http://example.org/empty").find("Ontology(<http://example.org/empty>") !=
          std::string::npos);
    CHECK_THROWS_AS(serializeFunctional({ax}, "not an iri"), Error);
  }

  TEST_CASE("IRI validation") {
    CHECK(isValidIri("http://example.org/tedei"));
    CHECK(isValidIri("urn:x-tedei:test"));
    CHECK_FALSE(isValidIri("example"));
    CHECK_FALSE(isValidIri("http://exa mple.org"));
    CHECK_FALSE(isValidIri(""));
  }

  TEST_CASE("expressivity census") {
    CHECK(expressivity({parseDLAxiom("A ⊑ B")}) == "AL-fragment");
    CHECK(expressivity({parseDLAxiom("A ⊑ ∃p.B")}) == "ALE");
    CHECK(expressivity({parseDLAxiom("A ⊑ B ⊔ C")}) == "ALU");
    CHECK(expressivity({parseDLAxiom("A ⊑ ¬∃p.B"), parseDLAxiom("A ⊑ ≥3 p.C")}) == "ALCQ");
    CHECK(expressivity({parseDLAxiom("A ⊑ ∃p.{I}"), parseDLAxiom("A ⊑ ∃p.Self")}) == "ALEO(Self)");
  }
}
