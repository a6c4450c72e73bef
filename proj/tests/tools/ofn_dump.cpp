// Writes functional-syntax documents for external validation:
//   <out>/corpus.ofn  every alternative generated for the given corpus files
//   <out>/random.ofn  1000 random normalized axioms
//   <out>/expected.json  distinct SubClassOf counts per document

#include <fstream>
#include <iostream>
#include <random>
#include <set>

#include "json.hpp"
#include "support/generators.hpp"
#include "tedei/backend.hpp"
#include "tedei/corpus.hpp"

namespace {

std::size_t write(const std::string& path, const std::vector<tedei::Axiom>& axioms, const std::string& iri) {
  std::ofstream out(path);
  out << tedei::serializeFunctional(axioms, iri);
  std::set<std::string> distinct;
  for (const auto& a : axioms) distinct.insert(tedei::functionalAxiom(a));
  return distinct.size();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: ofn_dump <out-dir> [corpus...]\n";
    return 64;
  }
  std::string dir = argv[1];
  std::vector<tedei::Axiom> corpus;
  for (int i = 2; i < argc; ++i)
    for (const auto& row : tedei::runCorpus(argv[i]).perSentence) corpus.insert(corpus.end(), row.axioms.begin(), row.axioms.end());

  std::mt19937 rng(314);
  std::vector<tedei::Axiom> random;
  for (int i = 0; i < 1000; ++i) random.push_back(tedei::normalize(tedei::testing::randomAxiom(rng, 3)));

  nlohmann::json expected;
  expected["corpus.ofn"] = write(dir + "/corpus.ofn", corpus, "http://example.org/tedei/corpus");
  expected["random.ofn"] = write(dir + "/random.ofn", random, "http://example.org/tedei/random");
  std::ofstream(dir + "/expected.json") << expected.dump(2) << "\n";
  return 0;
}
