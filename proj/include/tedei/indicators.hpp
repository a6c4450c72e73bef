#pragma once

// Natural-language indicator phrases for each constructor of the grammar.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "tedei/model.hpp"

namespace tedei {

using Phrase = std::vector<std::string>;  // lowercase words

class IndicatorTables {
 public:
  // The tables as listed with the grammar, plus the multi-word spellings of
  // ATLEAST/ATMOST and copular negation ("is not", "are not").
  static const IndicatorTables& standard();

  const std::vector<Phrase>& phrases(IndicatorKind kind) const;

  // All (kind, length) pairs whose phrase matches the lemmas starting at `pos`.
  struct Match {
    IndicatorKind kind;
    std::size_t length;
  };
  std::vector<Match> matchAt(std::span<const Token> tokens, std::size_t pos) const;

  // True if the lowercase word occurs in any indicator phrase.
  bool containsWord(const std::string& word) const;

  void add(IndicatorKind kind, Phrase phrase);

 private:
  std::map<IndicatorKind, std::vector<Phrase>> table_;
};

}  // namespace tedei
