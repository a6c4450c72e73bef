#include "tedei/indicators.hpp"

#include <algorithm>
#include <sstream>

namespace tedei {

namespace {

Phrase split(const std::string& s) {
  Phrase out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

IndicatorTables build() {
  IndicatorTables t;
  auto add = [&](IndicatorKind k, std::initializer_list<const char*> items) {
    for (const char* p : items) t.add(k, split(p));
  };
  using K = IndicatorKind;
  add(K::ClsExp, {"and", "or", ","});
  add(K::Union, {"or"});
  add(K::Intersection, {"that", "which", "who", "whose"});
  add(K::PreComplement, {"does not", "do not", "did not", "is not", "are not"});
  add(K::PostComplement, {"not", "no"});
  add(K::Universal, {"exclusively", "nothing but", "nothing except", "only"});
  add(K::Existential, {"a", "an", "all", "any", "few", "many", "some", "several"});
  add(K::ExactCardinality, {"exactly", "just", "may be", "only"});
  add(K::AmbiExactCard, {"about", "almost", "approximately", "around", "close to"});
  add(K::PreMinCard, {"atleast", "at least", "least", "more than", "not less than"});
  add(K::PostMinCard, {"or more"});
  add(K::PreMaxCard, {"atmost", "at most", "most", "less than", "not more than", "within"});
  add(K::PostMaxCard, {"or less"});
  add(K::Self, {"myself", "ourselves", "yourself", "yourselves", "himself", "herself", "itself",
                "themselves"});
  return t;
}

}  // namespace

const IndicatorTables& IndicatorTables::standard() {
  static const IndicatorTables tables = build();
  return tables;
}

void IndicatorTables::add(IndicatorKind kind, Phrase phrase) { table_[kind].push_back(std::move(phrase)); }

const std::vector<Phrase>& IndicatorTables::phrases(IndicatorKind kind) const {
  static const std::vector<Phrase> empty;
  auto it = table_.find(kind);
  return it == table_.end() ? empty : it->second;
}

std::vector<IndicatorTables::Match> IndicatorTables::matchAt(std::span<const Token> tokens,
                                                             std::size_t pos) const {
  std::vector<Match> out;
  for (const auto& [kind, list] : table_) {
    for (const auto& phrase : list) {
      if (pos + phrase.size() > tokens.size()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < phrase.size() && ok; ++i) ok = tokens[pos + i].lemma == phrase[i];
      if (ok) out.push_back({kind, phrase.size()});
    }
  }
  return out;
}

bool IndicatorTables::containsWord(const std::string& word) const {
  for (const auto& [kind, list] : table_)
    for (const auto& phrase : list)
      if (std::find(phrase.begin(), phrase.end(), word) != phrase.end()) return true;
  return false;
}

}  // namespace tedei
