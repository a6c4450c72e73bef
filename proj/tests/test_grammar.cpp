#include <random>

#include "doctest.h"

#include "support/generators.hpp"
#include "support/helpers.hpp"
#include "tedei/corpus.hpp"
#include "tedei/grammar.hpp"

using namespace tedei;

TEST_SUITE("grammar") {
  TEST_CASE("construct examples are accepted") {
    for (const char* s : {"Every square contains right angles.",
                          "Every square is a quadrilateral that has 4 right angles.",
                          "Every rectangle is a quadrilateral having 4 right angles.",
                          "Every polygon is concave or convex.",
                          "Every rectangle contains some right angles.",
                          "Every rectangle contains only right angles."}) {
      INFO(s);
      auto v = isTedeiSentence(s);
      CHECK(v.tedei);
      CHECK(v.tedeiLexicalizations >= 1);
      CHECK(v.diagnostics.empty());
    }
  }

  TEST_CASE("free English is rejected with a diagnostic naming a token") {
    auto sentences = readCorpus(tedei::testing::sourceDir() + "/corpus/negative.txt");
    REQUIRE(sentences.size() == 10);
    for (const auto& s : sentences) {
      INFO(s);
      auto v = isTedeiSentence(s);
      CHECK_FALSE(v.tedei);
      CHECK_FALSE(v.diagnostics.empty());
      CHECK(v.diagnostics.find('\'') != std::string::npos);
    }
  }

  TEST_CASE("parse tree shape for the adenine sentence") {
    Lexicalizer lexicalizer;
    auto en = lexicalizer.enumerate(tag("Every adenine is a purine base found in DNA."));
    REQUIRE_FALSE(en.lexicalizations.empty());
    auto trees = recognize(en.lexicalizations.front());
    REQUIRE_FALSE(trees.empty());
    const auto& root = *trees.front();
    CHECK(root.kind == NodeKind::Start);
    CHECK(root.contains(NodeKind::ExistRes));
    CHECK(root.children.size() == 2);
    auto text = describe(root, en.lexicalizations.front());
    CHECK(text.rfind("(start (lexpr CLASS[adenine])", 0) == 0);
    CHECK(text.find("PROPERTY[found in]") != std::string::npos);
    auto range = tokenRange(root, en.lexicalizations.front());
    CHECK(range.begin == 1);
  }

  TEST_CASE("ambiguous coordination yields several trees in a stable order") {
    Lexicalizer lexicalizer;
    auto en = lexicalizer.enumerate(tag("An abdomen exists between thorax and pelvis."));
    REQUIRE(en.lexicalizations.size() == 1);
    auto a = recognizeAll(en.lexicalizations.front());
    auto b = recognizeAll(en.lexicalizations.front());
    REQUIRE(a.trees.size() > 1);
    REQUIRE(a.trees.size() == b.trees.size());
    for (std::size_t i = 0; i < a.trees.size(); ++i)
      CHECK(describe(*a.trees[i], en.lexicalizations.front()) == describe(*b.trees[i], en.lexicalizations.front()));
  }

  TEST_CASE("tree cap truncates") {
    Lexicalizer lexicalizer;
    auto en = lexicalizer.enumerate(tag("An abdomen exists between thorax and pelvis."));
    auto full = recognizeAll(en.lexicalizations.front());
    auto capped = recognizeAll(en.lexicalizations.front(), 1);
    CHECK(capped.trees.size() == 1);
    CHECK(capped.truncated);
    CHECK_FALSE(full.truncated);
  }

  TEST_CASE("random derivations are recognized") {
    std::mt19937 rng(5);
    tedei::testing::DerivationBuilder builder(rng);
    for (int i = 0; i < 300; ++i) {
      auto lex = builder.build();
      REQUIRE_NOTHROW(lex.validate());
      CHECK_FALSE(recognizeAll(lex).trees.empty());
    }
  }

  TEST_CASE("a sentence with no subject class is rejected") {
    auto v = isTedeiSentence("Is a pizza.");
    CHECK_FALSE(v.tedei);
    CHECK(v.failToken.has_value());
  }

  TEST_CASE("BNF lists every nonterminal") {
    auto bnf = grammarBnf();
    for (const char* nt : {"<start>", "<union>", "<intersection>", "<clsExpComb>", "<complement>", "<uniRes>",
                           "<existRes>", "<exactCard>", "<minCard>", "<maxCard>", "<qualExactCard>",
                           "<qualMinCard>", "<qualMaxCard>", "<indValueRes>", "<selfValueRes>", "<classComb>"})
      CHECK(bnf.find(nt) != std::string::npos);
  }
}
