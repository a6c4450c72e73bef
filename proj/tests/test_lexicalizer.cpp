#include <fstream>
#include <set>

#include "doctest.h"

#include "support/helpers.hpp"
#include "tedei/corpus.hpp"
#include "tedei/lexicalizer.hpp"

using namespace tedei;

namespace {

std::vector<std::string> tags(const std::vector<Token>& toks) {
  std::vector<std::string> out;
  for (const auto& t : toks) out.push_back(t.pos);
  return out;
}

std::string render(const Lexicalization& lex) {
  std::string out;
  for (const auto& s : lex.spans) out += std::string(to_string(s.kind)) + "[" + lex.text(s) + "] ";
  return out;
}

}  // namespace

TEST_SUITE("lexicalizer") {
  TEST_CASE("tokenize separates punctuation and rejects blank input") {
    auto toks = tokenize("Paris, the capital, lies here.");
    REQUIRE(toks.size() == 8);
    CHECK(toks[1].surface == ",");
    CHECK(toks.back().surface == ".");
    CHECK(toks.back().index == 7);
    CHECK_THROWS_AS(tokenize("   "), Error);
  }

  TEST_CASE("bundled tagger") {
    CHECK(tags(tag("Every adenine is a purine base found in DNA.")) ==
          std::vector<std::string>{"DT", "NN", "VBZ", "DT", "NN", "NN", "VBN", "IN", "NNP", "."});
    auto kids = tag("All kids play.");
    CHECK(kids[1].pos == "NNS");
    CHECK(kids[2].pos == "VBP");
  }

  TEST_CASE("custom lexicon through the Tagger interface") {
    auto lexicon = TaggerLexicon::parse("zorp\tVBZ\nblik\tNN\n[suffix]\n-ish\tJJ\n");
    LexiconTagger tagger(lexicon);
    auto toks = tag("blik zorp greenish", tagger);
    CHECK(tags(toks) == std::vector<std::string>{"NN", "VBZ", "JJ"});
  }

  TEST_CASE("cardinal values and singular forms") {
    CHECK(cardinalValue(Token{"3", "3", "CD", 0}) == 3);
    CHECK(cardinalValue(Token{"two", "two", "CD", 0}) == 2);
    CHECK_FALSE(cardinalValue(Token{"many", "many", "JJ", 0}).has_value());
    CHECK(singularize("toppings") == "topping");
    CHECK(singularize("species") == "species");
    CHECK(singularize("quarks") == "quark");
  }

  TEST_CASE("identifier extraction lists sub-maximal runs") {
    auto toks = tag("Every vegetable pizza is a tasty pizza.");
    auto ids = extractIdentifiers(toks);
    auto has = [&](const std::string& name, IdentifierKind k) {
      for (const auto& m : ids)
        if (m.identifier.canonical == name && m.identifier.kind == k) return true;
      return false;
    };
    CHECK(has("VegetablePizza", IdentifierKind::Concept));
    CHECK(has("TastyPizza", IdentifierKind::Concept));
    CHECK(has("Tasty", IdentifierKind::Concept));
    CHECK(has("Pizza", IdentifierKind::Concept));
  }

  TEST_CASE("adjective-headed properties are named as copular relations") {
    auto toks = tag("Every exotic species is a species that is not native to a region.");
    Identifier id = makeIdentifier(toks, {9, 11}, IdentifierKind::Property);
    CHECK(id.canonical == "isNativeTo");
  }

  TEST_CASE("every lexicalization partitions the tokens") {
    auto sentences = readCorpus(tedei::testing::sourceDir() + "/corpus/worked-examples.txt");
    auto smoke = readCorpus(tedei::testing::sourceDir() + "/corpus/smoke.txt");
    sentences.insert(sentences.end(), smoke.begin(), smoke.end());
    Lexicalizer lexicalizer;
    for (const auto& s : sentences) {
      auto en = lexicalizer.enumerate(tag(s));
      for (const auto& lex : en.lexicalizations) {
        INFO(s << " :: " << render(lex));
        CHECK_NOTHROW(lex.validate());
      }
    }
  }

  TEST_CASE("lexicalizations are distinct") {
    Lexicalizer lexicalizer;
    auto en = lexicalizer.enumerate(tag("Sloppy giuseppe pizza is topped with mozzarella and parmesan."));
    std::set<std::string> seen;
    for (const auto& lex : en.lexicalizations) CHECK(seen.insert(render(lex)).second);
  }

  TEST_CASE("cap monotonicity: a larger cap extends the smaller result") {
    Lexicalizer lexicalizer;
    auto toks = tag("Every exotic species is a species that is not native to a region.");
    auto full = lexicalizer.enumerate(toks);
    REQUIRE(full.lexicalizations.size() > 3);
    CHECK_FALSE(full.truncated);
    for (std::size_t cap = 1; cap <= full.lexicalizations.size(); ++cap) {
      auto part = lexicalizer.enumerate(toks, cap);
      REQUIRE(part.lexicalizations.size() == cap);
      CHECK(part.truncated == (cap < full.lexicalizations.size()));
      for (std::size_t i = 0; i < cap; ++i) CHECK(render(part.lexicalizations[i]) == render(full.lexicalizations[i]));
    }
  }

  TEST_CASE("copula residue is tried first") {
    Lexicalizer lexicalizer;
    auto en = lexicalizer.enumerate(tag("Every vegetable pizza is made of vegetable items."));
    REQUIRE_FALSE(en.lexicalizations.empty());
    const auto& first = en.lexicalizations.front();
    REQUIRE(first.spans.size() >= 2);
    CHECK(first.text(first.spans[1]) == "made of");
  }

  TEST_CASE("pattern files") {
    auto set = PatternSet::parse("# comment\nCONCEPT\t(JJ)*(NN|NNS)\nPROPERTY\tVBZ\nINDIVIDUAL\tNNP\n");
    CHECK(set.rules().size() == 3);
    CHECK_THROWS_AS(PatternSet::parse("CONCEPT\tNN\n"), Error);
    CHECK_THROWS_AS(PatternSet::parse("THING\tNN\n"), Error);
    CHECK_THROWS_AS(PatternSet::load("/nonexistent/patterns.tsv"), Error);
  }
}
