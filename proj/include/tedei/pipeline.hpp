#pragma once

// End-to-end analysis of one sentence: tag, lexicalize, parse, interpret,
// transform to ACE and build axioms.

#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "tedei/ace.hpp"
#include "tedei/backend.hpp"
#include "tedei/grammar.hpp"
#include "tedei/interpreter.hpp"
#include "tedei/lexicalizer.hpp"

namespace tedei {

struct PipelineConfig {
  std::size_t lexicalizationCap = kDefaultLexicalizationCap;
  std::size_t treeCap = kDefaultTreeCap;
  const PatternSet* patterns = nullptr;        // null → PatternSet::standard()
  const IndicatorTables* tables = nullptr;     // null → IndicatorTables::standard()
  const PatternRegistry* registry = nullptr;   // null → PatternRegistry::standard()
  std::string ontologyIri = "http://example.org/tedei";
};

struct Alternative {
  Interpretation interpretation;
  Axiom axiom;
  std::string aceSurface;
  std::string aceTagged;
  std::string dl;
  std::string functional;
};

struct ParsedLexicalization {
  std::shared_ptr<const Lexicalization> lexicalization;
  std::vector<ParseTree> trees;
  bool treesTruncated = false;
};

struct Analysis {
  std::string sentence;
  std::string sentenceId;
  std::vector<Token> tokens;
  bool tedei = false;
  std::string diagnostics;
  std::optional<std::size_t> failToken;
  std::size_t lexicalizationCount = 0;
  bool lexicalizationsTruncated = false;
  // Only lexicalizations with at least one parse.
  std::vector<ParsedLexicalization> parsed;
  std::size_t interpretationCount = 0;
  // One entry per distinct normalized axiom, in (lexicalization, tree, interpretation) order.
  std::vector<Alternative> alternatives;
};

Analysis analyze(const std::string& sentence, const PipelineConfig& config = {},
                 const std::string& sentence_id = {});

// JSON body used by the service and `tedei axioms --format json`.
nlohmann::json analysisToJson(const Analysis& a);

}  // namespace tedei
