#include "doctest.h"

#include "support/helpers.hpp"
#include "tedei/corpus.hpp"

using namespace tedei;

namespace {

Analysis run(const std::string& s) {
  auto a = analyze(s);
  REQUIRE_FALSE(a.alternatives.empty());
  return a;
}

}  // namespace

TEST_SUITE("ace") {
  TEST_CASE("surface transformation golden rows") {
    struct Row {
      const char* input;
      const char* expected;
    };
    for (const Row& r : {Row{"Every battery produces electricity.", "Every battery produces some electricity."},
                         Row{"An adenine is a purine base.", "An adenine is a purine-base."},
                         Row{"A kidnapper seizes and detains a victim.", "A kidnapper seizes a victim and detains a victim."},
                         Row{"Every binomial consists of two terms.", "Every binomial consists-of two terms."},
                         Row{"All kids play.", "All kids play something."},
                         Row{"Every person should learn some maths.", "Every person should-learn some maths."},
                         Row{"Every abacus efficiently performs some arithmetic.",
                             "Every abacus efficiently-performs some arithmetic."},
                         Row{"A console houses some electronic instruments.",
                             "A console houses some electronic-instruments."}}) {
      INFO(r.input);
      CHECK(tedei::testing::first(run(r.input)).aceSurface == r.expected);
    }
  }

  TEST_CASE("coordinated noun phrases before hyphenation") {
    auto a = run("An abdomen exists between thorax and pelvis.");
    const auto& in = tedei::testing::first(a).interpretation;
    CHECK(surfaceTransform(in, {.hyphenate = false}) == "An abdomen exists between thorax and exists between pelvis.");
    CHECK(surfaceTransform(in) == "An abdomen exists-between thorax and exists-between pelvis.");
  }

  TEST_CASE("tagged form of the adenine sentence") {
    auto a = run("Every adenine is a purine base found in DNA.");
    CHECK(tedei::testing::first(a).aceTagged == "Every n:adenine is a n:purine-base and v:found-in a n:DNA.");
    CHECK(tedei::testing::first(a).aceSurface == "Every adenine is a purine-base and found-in DNA.");
  }

  TEST_CASE("quantifier readings are visible in the paraphrase") {
    auto a = run("Every driver drives a car.");
    REQUIRE(a.alternatives.size() == 3);
    CHECK(a.alternatives[0].aceSurface == "Every driver drives a car.");
    CHECK(a.alternatives[1].aceSurface == "Every driver drives only car.");
  }

  TEST_CASE("reading the tagged form back gives the same axiom") {
    auto sentences = readCorpus(tedei::testing::sourceDir() + "/corpus/worked-examples.txt");
    std::size_t checked = 0;
    for (const auto& s : sentences) {
      auto a = analyze(s);
      for (const auto& alt : a.alternatives) {
        if (alt.interpretation.form != InterpretationForm::Definitional) continue;
        INFO(s << " :: " << alt.aceTagged);
        auto reading = fromTaggedAce(alt.aceTagged, *alt.interpretation.lexicalization);
        auto rebuilt = Axiom::subClassOf(reading.subject, reading.rhs);
        CHECK(sameAxiom(rebuilt, alt.axiom));
        ++checked;
      }
    }
    CHECK(checked > 50);
  }

  TEST_CASE("tagging never fails on generated surfaces") {
    for (const char* file : {"/corpus/worked-examples.txt", "/corpus/smoke.txt"}) {
      for (const auto& s : readCorpus(tedei::testing::sourceDir() + file)) {
        INFO(s);
        CHECK_NOTHROW(analyze(s));
      }
    }
  }

  TEST_CASE("unknown words cannot be tagged") {
    auto a = run("Every driver drives a car.");
    CHECK_THROWS_AS(tagTransform("Every driver juggles a car.", *a.alternatives[0].interpretation.lexicalization),
                    Error);
  }
}
