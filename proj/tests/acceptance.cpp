// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "support/generators.hpp"
#include "support/helpers.hpp"
#include "tedei/corpus.hpp"
#include "tedei/grammar.hpp"

using namespace tedei;
using tedei::testing::hasAxiom;

namespace {

struct Check {
  std::ostringstream detail;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "\n    failed: " << what;
    }
  }
};

std::string corpusPath(const std::string& name) { return tedei::testing::sourceDir() + "/corpus/" + name; }

std::string shellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

int exitStatus(const std::string& command) {
  int raw = std::system(command.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

void checkGoldenAxioms(Check& c) {
  struct Row {
    const char* sentence;
    const char* axiom;
  };
  const Row rows[] = {
      {"Every adenine is a purine base found in DNA.", "Adenine ⊑ PurineBase ⊓ ∃foundIn.DNA"},
      {"Sloppy giuseppe pizza is topped with mozzarella and parmesan.",
       "SloppyGiuseppePizza ⊑ ∃toppedWith.Mozzarella ⊓ ∃toppedWith.Parmesan"},
      {"An interesting pizza is a pizza that has at least 3 toppings.", "InterestingPizza ⊑ Pizza ⊓ ≥3 has.Toppings"},
      {"Every abdication is the act of abdicating.", "Abdication ⊑ ∃actOfAbdicating.⊤"},
      {"Every exotic species is a species that is not native to a region.",
       "ExoticSpecies ⊑ Species ⊓ ¬∃isNativeToRegion.⊤"},
  };
  for (const auto& r : rows) {
    auto start = std::chrono::steady_clock::now();
    auto a = analyze(r.sentence);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(hasAxiom(a, r.axiom), std::string(r.sentence) + " -> " + r.axiom);
    c.require(seconds < 1.0, std::string(r.sentence) + " took " + std::to_string(seconds) + " s");
  }
}

void checkAmbiguity(Check& c) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> supersets = {
      {"Quarks possess color charge.",
       {"Quark ⊑ ∃possess.ColorCharge", "Quark ⊑ ∃possess.Color ⊓ ∃possess.Charge", "Quark ⊓ ∃possess.ColorCharge ⊑ ⊤",
        "Quark ⊓ ∃possess.Color ⊓ ∃possess.Charge ⊑ ⊤"}},
      {"A vegetarian pizza is an interesting pizza.",
       {"VegetarianPizza ⊑ InterestingPizza", "VegetarianPizza ⊑ Interesting ⊓ Pizza",
        "VegetarianPizza ⊓ InterestingPizza ⊑ ⊤", "VegetarianPizza ⊓ Interesting ⊓ Pizza ⊑ ⊤"}},
  };
  for (const auto& [sentence, axioms] : supersets) {
    auto a = analyze(sentence);
    for (const auto& ax : axioms) c.require(hasAxiom(a, ax), sentence + " -> " + ax);
  }
  for (const char* sentence : {"Every driver drives a car.", "Every vegetable pizza is made of vegetable items."}) {
    Lexicalizer lexicalizer;
    auto en = lexicalizer.enumerate(tag(sentence));
    std::size_t count = 0;
    if (!en.lexicalizations.empty()) {
      auto lex = std::make_shared<const Lexicalization>(en.lexicalizations.front());
      auto trees = recognize(*lex);
      if (!trees.empty()) count = interpret(trees.front(), lex).size();
    }
    c.require(count == 3, std::string(sentence) + " gave " + std::to_string(count) + " interpretations");
  }
}

void checkTransformations(Check& c) {
  struct Row {
    const char* input;
    const char* surface;
  };
  const Row rows[] = {
      {"Every battery produces electricity.", "Every battery produces some electricity."},
      {"An adenine is a purine base.", "An adenine is a purine-base."},
      {"A kidnapper seizes and detains a victim.", "A kidnapper seizes a victim and detains a victim."},
      {"Every binomial consists of two terms.", "Every binomial consists-of two terms."},
      {"All kids play.", "All kids play something."},
      {"Every person should learn some maths.", "Every person should-learn some maths."},
      {"Every abacus efficiently performs some arithmetic.", "Every abacus efficiently-performs some arithmetic."},
      {"A console houses some electronic instruments.", "A console houses some electronic-instruments."},
  };
  for (const auto& r : rows) {
    auto a = analyze(r.input);
    std::string got = a.alternatives.empty() ? "<none>" : a.alternatives.front().aceSurface;
    c.require(got == r.surface, std::string(r.input) + " -> " + got);
  }
  auto abdomen = analyze("An abdomen exists between thorax and pelvis.");
  std::string got = abdomen.alternatives.empty()
                        ? "<none>"
                        : surfaceTransform(abdomen.alternatives.front().interpretation, {.hyphenate = false});
  c.require(got == "An abdomen exists between thorax and exists between pelvis.", "abdomen -> " + got);

  auto adenine = analyze("Every adenine is a purine base found in DNA.");
  std::string tagged = adenine.alternatives.empty() ? "<none>" : adenine.alternatives.front().aceTagged;
  c.require(tagged == "Every n:adenine is a n:purine-base and v:found-in a n:DNA.", "adenine tagged -> " + tagged);
}

void checkGrammarCoverage(Check& c, const std::string& cli) {
  for (const char* s : {"Every square contains right angles.",
                        "Every square is a quadrilateral that has 4 right angles.",
                        "Every rectangle is a quadrilateral having 4 right angles.", "Every polygon is concave or convex.",
                        "Every rectangle contains some right angles.", "Every rectangle contains only right angles."})
    c.require(isTedeiSentence(s).tedei, std::string(s) + " is not TEDEI");
  auto negatives = readCorpus(corpusPath("negative.txt"));
  c.require(negatives.size() == 10, "negative corpus has " + std::to_string(negatives.size()) + " sentences");
  for (const auto& s : negatives) {
    auto v = isTedeiSentence(s);
    c.require(!v.tedei && !v.diagnostics.empty(), s + " accepted or without diagnostics");
    int status = exitStatus(cli + " parse " + shellQuote(s) + " >/dev/null 2>&1");
    c.require(status == 2, s + " exited " + std::to_string(status));
  }
}

void checkAtLeastOneAxiom(Check& c) {
  std::size_t sentences = 0;
  for (const char* file : {"worked-examples.txt", "smoke.txt"}) {
    for (const auto& s : readCorpus(corpusPath(file))) {
      auto a = analyze(s);
      if (!a.tedei) continue;
      ++sentences;
      c.require(!a.alternatives.empty(), s + " is TEDEI with no axiom");
    }
  }
  c.require(sentences > 30, "only " + std::to_string(sentences) + " TEDEI corpus sentences");

  std::mt19937 rng(4242);
  tedei::testing::DerivationBuilder builder(rng);
  for (int i = 0; i < 1000; ++i) {
    auto lex = std::make_shared<const Lexicalization>(builder.build());
    auto trees = recognizeAll(*lex).trees;
    if (trees.empty()) {
      c.require(false, "random derivation " + std::to_string(i) + " not recognized");
      continue;
    }
    for (const auto& t : trees) c.require(!interpret(t, lex).empty(), "random tree " + std::to_string(i));
  }
}

void checkOracles(Check& c, const std::string& python, const std::string& dump) {
  std::string script = tedei::testing::sourceDir() + "/tests/validate_ofn.py";
  int status = exitStatus(python + " " + shellQuote(script) + " " + shellQuote(dump) + " " +
                          shellQuote(tedei::testing::sourceDir()));
  c.require(status == 0, "pyhornedowl validation exited " + std::to_string(status));

  std::mt19937 rng(31337);
  for (int i = 0; i < 1000; ++i) {
    auto e = normalize(tedei::testing::randomExpr(rng, 4));
    auto text = serializeDL(e);
    auto back = normalize(parseDLExpr(text));
    c.require(structurallyEqual(e, back) && serializeDL(back) == text, "DL round trip: " + text);
  }
}

void checkDeterminism(Check& c) {
  auto sentences = readCorpus(corpusPath("worked-examples.txt"));
  auto smoke = readCorpus(corpusPath("smoke.txt"));
  sentences.insert(sentences.end(), smoke.begin(), smoke.end());
  auto render = [&](const CoverageReport& r) { return reportToJson(r).dump(2) + renderReportTable(r); };
  auto first = render(runCorpusParallel(sentences));
  auto second = render(runCorpusParallel(sentences));
  c.require(first == second, "two parallel runs differ");
  c.require(first == render(runCorpusSerial(sentences)), "parallel and serial reports differ");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"golden axioms for the five reference sentences, under 1 s each", checkGoldenAxioms},
      {"ambiguity: indefinite-subject supersets and three quantifier readings", checkAmbiguity},
      {"surface and tagged transformation golden rows", checkTransformations},
      {"grammar coverage: construct examples accepted, negative corpus rejected with exit 2",
       [](Check& c) { checkGrammarCoverage(c, TEDEI_CLI); }},
      {"at least one axiom per TEDEI sentence over the corpus and 1000 random trees", checkAtLeastOneAxiom},
      {"oracles: OWL parser accepts the output, DL text round trips",
       [](Check& c) { checkOracles(c, TEDEI_PYTHON, TEDEI_OFN_DUMP); }},
      {"determinism: corpus evaluation reports are byte-identical", checkDeterminism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].name << c.detail.str() << "\n"
              << std::flush;
    failures += !c.ok;
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
