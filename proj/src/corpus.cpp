#include "tedei/corpus.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace tedei {

namespace {

std::string trimLine(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void accumulate(CoverageReport& r) {
  r.inputSentences = r.perSentence.size();
  for (const auto& row : r.perSentence) {
    r.tedeiSentences += row.tedei ? 1 : 0;
    r.totalLexicalizations += row.lexicalizations;
    r.tedeiLexicalizations += row.tedeiLexicalizations;
    r.interpretations += row.interpretations;
    r.axioms += row.axioms.size();
    r.truncated = r.truncated || row.truncated;
  }
}

}  // namespace

std::vector<std::string> readCorpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read corpus file: " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto t = trimLine(line);
    if (t.empty() || t[0] == '#') continue;
    out.push_back(t);
  }
  return out;
}

SentenceRow evaluateSentence(const std::string& sentence, std::size_t index, const PipelineConfig& config) {
  SentenceRow row;
  row.index = index;
  row.sentence = sentence;
  try {
    auto a = analyze(sentence, config, "s" + std::to_string(index));
    row.tedei = a.tedei;
    row.lexicalizations = a.lexicalizationCount;
    row.tedeiLexicalizations = a.parsed.size();
    row.interpretations = a.interpretationCount;
    row.truncated = a.lexicalizationsTruncated;
    for (const auto& p : a.parsed) row.truncated = row.truncated || p.treesTruncated;
    row.diagnostics = a.diagnostics;
    for (const auto& alt : a.alternatives) {
      row.axioms.push_back(alt.axiom);
      row.dl.push_back(alt.dl);
    }
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

CoverageReport runCorpusSerial(const std::vector<std::string>& sentences, const PipelineConfig& config) {
  CoverageReport r;
  r.perSentence.reserve(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) r.perSentence.push_back(evaluateSentence(sentences[i], i + 1, config));
  accumulate(r);
  return r;
}

CoverageReport runCorpusParallel(const std::vector<std::string>& sentences, const PipelineConfig& config) {
  CoverageReport r;
  r.perSentence.resize(sentences.size());
  const auto n = static_cast<std::ptrdiff_t>(sentences.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto k = static_cast<std::size_t>(i);
    r.perSentence[k] = evaluateSentence(sentences[k], k + 1, config);
  }
  accumulate(r);
  return r;
}

CoverageReport runCorpus(const std::string& path, const PipelineConfig& config, bool parallel) {
  auto sentences = readCorpus(path);
  return parallel ? runCorpusParallel(sentences, config) : runCorpusSerial(sentences, config);
}

std::string renderReportTable(const CoverageReport& r) {
  std::ostringstream o;
  o << std::left << std::setw(5) << "#" << std::setw(7) << "TEDEI" << std::right << std::setw(8) << "Lex"
    << std::setw(11) << "TEDEI-Lex" << std::setw(9) << "Interp" << std::setw(8) << "Axioms" << "  Sentence\n";
  for (const auto& row : r.perSentence) {
    o << std::left << std::setw(5) << row.index << std::setw(7) << (row.tedei ? "yes" : "no") << std::right
      << std::setw(8) << row.lexicalizations << std::setw(11) << row.tedeiLexicalizations << std::setw(9)
      << row.interpretations << std::setw(8) << row.axioms.size() << "  " << row.sentence;
    if (row.truncated) o << "  [truncated]";
    if (!row.error.empty()) o << "  [error: " << row.error << "]";
    o << "\n";
  }
  o << std::left << std::setw(5) << "all" << std::setw(7) << r.tedeiSentences << std::right << std::setw(8)
    << r.totalLexicalizations << std::setw(11) << r.tedeiLexicalizations << std::setw(9) << r.interpretations
    << std::setw(8) << r.axioms << "  " << r.inputSentences << " sentences\n";
  return o.str();
}

nlohmann::json reportToJson(const CoverageReport& r) {
  nlohmann::json j;
  j["inputSentences"] = r.inputSentences;
  j["tedeiSentences"] = r.tedeiSentences;
  j["totalLexicalizations"] = r.totalLexicalizations;
  j["tedeiLexicalizations"] = r.tedeiLexicalizations;
  j["interpretations"] = r.interpretations;
  j["axioms"] = r.axioms;
  j["truncated"] = r.truncated;
  auto rows = nlohmann::json::array();
  for (const auto& row : r.perSentence) {
    rows.push_back({{"index", row.index},
                    {"sentence", row.sentence},
                    {"tedei", row.tedei},
                    {"lexicalizations", row.lexicalizations},
                    {"tedeiLexicalizations", row.tedeiLexicalizations},
                    {"interpretations", row.interpretations},
                    {"axioms", row.dl},
                    {"truncated", row.truncated},
                    {"diagnostics", row.diagnostics},
                    {"error", row.error}});
  }
  j["perSentence"] = rows;
  return j;
}

GoldStats goldCompareText(const CoverageReport& report, const std::string& gold_text) {
  GoldStats g;
  std::istringstream in(gold_text);
  std::string line;
  while (std::getline(in, line)) {
    auto t = trimLine(line);
    if (t.empty() || t[0] == '#') continue;
    GoldRow row;
    auto tab = t.find('\t');
    if (tab == std::string::npos) {
      row.gold = t;
      row.error = "expected sentenceIndex<TAB>axiom";
    } else {
      row.gold = trimLine(t.substr(tab + 1));
      try {
        row.sentenceIndex = std::stoul(t.substr(0, tab));
      } catch (const std::exception&) {
        row.error = "bad sentence index";
      }
    }
    if (row.error.empty()) {
      try {
        auto gold = parseDLAxiom(row.gold);
        if (row.sentenceIndex >= 1 && row.sentenceIndex <= report.perSentence.size()) {
          for (const auto& ax : report.perSentence[row.sentenceIndex - 1].axioms)
            if (sameAxiom(ax, gold)) row.hit = true;
        }
      } catch (const Error& e) {
        row.error = e.what();
      }
    }
    ++g.total;
    if (row.hit) ++g.hits;
    if (!row.error.empty()) ++g.errors;
    g.rows.push_back(std::move(row));
  }
  return g;
}

GoldStats goldCompare(const CoverageReport& report, const std::string& gold_path) {
  std::ifstream in(gold_path);
  if (!in) throw Error(ErrorCode::Io, "cannot read gold file: " + gold_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return goldCompareText(report, ss.str());
}

std::string renderGoldTable(const GoldStats& g) {
  std::ostringstream o;
  for (const auto& row : g.rows) {
    o << std::left << std::setw(5) << row.sentenceIndex << std::setw(6)
      << (!row.error.empty() ? "error" : row.hit ? "hit" : "miss") << row.gold;
    if (!row.error.empty()) o << "  (" << row.error << ")";
    o << "\n";
  }
  o << "gold hits: " << g.hits << "/" << g.total;
  if (g.errors) o << " (" << g.errors << " unparseable)";
  o << "\n";
  return o.str();
}

nlohmann::json goldToJson(const GoldStats& g) {
  nlohmann::json j;
  j["total"] = g.total;
  j["hits"] = g.hits;
  j["errors"] = g.errors;
  auto rows = nlohmann::json::array();
  for (const auto& r : g.rows)
    rows.push_back({{"sentenceIndex", r.sentenceIndex}, {"gold", r.gold}, {"hit", r.hit}, {"error", r.error}});
  j["rows"] = rows;
  return j;
}

}  // namespace tedei
