#pragma once

// Batch evaluation over a corpus file: coverage and formalization counts, plus
// containment of gold axioms among the generated alternatives.

#include <string>
#include <vector>

#include "json.hpp"

#include "tedei/pipeline.hpp"

namespace tedei {

struct SentenceRow {
  std::size_t index = 0;  // 1-based line order among non-comment lines
  std::string sentence;
  bool tedei = false;
  std::size_t lexicalizations = 0;
  std::size_t tedeiLexicalizations = 0;
  std::size_t interpretations = 0;
  bool truncated = false;
  std::string diagnostics;
  std::string error;  // pipeline failure for this sentence, if any
  std::vector<Axiom> axioms;
  std::vector<std::string> dl;
};

struct CoverageReport {
  std::size_t inputSentences = 0;
  std::size_t tedeiSentences = 0;
  std::size_t totalLexicalizations = 0;
  std::size_t tedeiLexicalizations = 0;
  std::size_t interpretations = 0;
  std::size_t axioms = 0;
  bool truncated = false;
  std::vector<SentenceRow> perSentence;
};

// Non-empty lines that do not start with '#'. Throws Error(Io) naming the path.
std::vector<std::string> readCorpus(const std::string& path);

SentenceRow evaluateSentence(const std::string& sentence, std::size_t index, const PipelineConfig& config);

// Reference implementation: one sentence after another.
CoverageReport runCorpusSerial(const std::vector<std::string>& sentences, const PipelineConfig& config = {});
// Sentences evaluated concurrently; rows are stored by index so the report is identical to the serial one.
CoverageReport runCorpusParallel(const std::vector<std::string>& sentences, const PipelineConfig& config = {});

CoverageReport runCorpus(const std::string& path, const PipelineConfig& config = {}, bool parallel = true);

std::string renderReportTable(const CoverageReport& r);
nlohmann::json reportToJson(const CoverageReport& r);

struct GoldRow {
  std::size_t sentenceIndex = 0;
  std::string gold;
  bool hit = false;
  std::string error;
};

struct GoldStats {
  std::size_t total = 0;
  std::size_t hits = 0;
  std::size_t errors = 0;
  std::vector<GoldRow> rows;
};

// Gold lines are `sentenceIndex<TAB>DL-axiom`; unparseable rows are recorded, not thrown.
GoldStats goldCompare(const CoverageReport& report, const std::string& gold_path);
GoldStats goldCompareText(const CoverageReport& report, const std::string& gold_text);

std::string renderGoldTable(const GoldStats& g);
nlohmann::json goldToJson(const GoldStats& g);

}  // namespace tedei
