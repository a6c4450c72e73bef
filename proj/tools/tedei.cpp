// tedei: command-line front end over the sentence-to-axiom pipeline.
//
// Exit codes: 0 success, 2 sentence is not TEDEI, 64 usage error, 74 I/O error,
// 1 any other pipeline error.

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "tedei/corpus.hpp"
#include "tedei/pipeline.hpp"
#include "tedei/service.hpp"

namespace {

constexpr int kExitNotTedei = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

std::string renderLexicalization(const tedei::Lexicalization& lex) {
  std::string out;
  for (const auto& span : lex.spans) {
    if (!out.empty()) out += ' ';
    out += std::string(tedei::to_string(span.kind));
    if (span.indicator) out += ":" + std::string(tedei::to_string(*span.indicator));
    out += "[" + lex.text(span) + "]";
  }
  return out;
}

int reportNotTedei(const tedei::Analysis& a) {
  std::cerr << "not a TEDEI sentence: " << a.sentence << "\n" << a.diagnostics << "\n";
  return kExitNotTedei;
}

int cmdParse(const std::string& sentence, const tedei::PipelineConfig& config) {
  auto a = tedei::analyze(sentence, config);
  std::cout << "lexicalizations: " << a.lexicalizationCount << (a.lexicalizationsTruncated ? " (truncated)" : "")
            << ", with a parse: " << a.parsed.size() << "\n";
  if (!a.tedei && a.lexicalizationCount > 0) {
    tedei::Lexicalizer lexicalizer(config.patterns ? *config.patterns : tedei::PatternSet::standard(),
                                   config.tables ? *config.tables : tedei::IndicatorTables::standard());
    for (const auto& lex : lexicalizer.enumerate(a.tokens, config.lexicalizationCap).lexicalizations)
      std::cout << "    " << renderLexicalization(lex) << "  (no parse)\n";
  }
  for (std::size_t i = 0; i < a.parsed.size(); ++i) {
    const auto& p = a.parsed[i];
    std::cout << "[" << i << "] " << renderLexicalization(*p.lexicalization) << "\n";
    for (std::size_t t = 0; t < p.trees.size(); ++t)
      std::cout << "    tree " << t << ": " << tedei::describe(*p.trees[t], *p.lexicalization) << "\n";
    if (p.treesTruncated) std::cout << "    (tree list truncated)\n";
  }
  return a.tedei ? 0 : reportNotTedei(a);
}

int cmdAxioms(const std::string& sentence, const std::string& format, bool all, const tedei::PipelineConfig& config) {
  auto a = tedei::analyze(sentence, config);
  if (!a.tedei) return reportNotTedei(a);
  if (!all && a.alternatives.size() > 1) a.alternatives.resize(1);

  if (format == "json") {
    std::cout << tedei::analysisToJson(a).dump(2) << "\n";
  } else if (format == "ofn") {
    std::vector<tedei::Axiom> axioms;
    for (const auto& alt : a.alternatives) axioms.push_back(alt.axiom);
    std::cout << tedei::serializeFunctional(axioms, config.ontologyIri);
  } else {
    for (const auto& alt : a.alternatives) std::cout << alt.dl << "\n";
  }
  return 0;
}

int cmdAce(const std::string& sentence, bool all, const tedei::PipelineConfig& config) {
  auto a = tedei::analyze(sentence, config);
  if (!a.tedei) return reportNotTedei(a);
  for (std::size_t i = 0; i < a.alternatives.size(); ++i) {
    const auto& alt = a.alternatives[i];
    if (all) std::cout << "[" << i << "] " << alt.dl << "\n";
    std::cout << "surface: " << alt.aceSurface << "\n" << "tagged:  " << alt.aceTagged << "\n";
    if (!all) break;
  }
  return 0;
}

int cmdBatch(const std::string& corpus, const std::string& gold, const std::string& report, bool serial,
             const tedei::PipelineConfig& config) {
  auto r = tedei::runCorpus(corpus, config, !serial);
  std::cout << tedei::renderReportTable(r);
  nlohmann::json dump = {{"coverage", tedei::reportToJson(r)}};
  if (!gold.empty()) {
    auto g = tedei::goldCompare(r, gold);
    std::cout << "\n" << tedei::renderGoldTable(g);
    dump["gold"] = tedei::goldToJson(g);
  }
  if (!report.empty()) {
    std::ofstream out(report, std::ios::trunc);
    if (!out) throw tedei::Error(tedei::ErrorCode::Io, "cannot write report " + report);
    out << dump.dump(2) << "\n";
    if (!out.flush()) throw tedei::Error(tedei::ErrorCode::Io, "cannot write report " + report);
  }
  return 0;
}

int cmdServe(const std::string& host, int port, const std::string& data, const std::string& web,
             const tedei::PipelineConfig& config) {
  tedei::ServiceConfig sc;
  sc.dataDir = data;
  sc.staticDir = web;
  sc.pipeline = config;
  tedei::Service service(sc);
  auto ready = [&](int bound, const std::function<void()>&) {
    std::cerr << "listening on http://" << host << ":" << bound << " (projects in " << data << ")\n";
  };
  if (!tedei::serve(service, host, port, ready)) {
    std::cerr << "cannot listen on " << host << ":" << port << "\n";
    return kExitIo;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formalize restricted English sentences as OWL class-expression axioms."};
  app.require_subcommand(1);

  tedei::PipelineConfig config;
  app.add_option("--lexicalization-cap", config.lexicalizationCap, "Maximum lexicalizations per sentence");
  app.add_option("--tree-cap", config.treeCap, "Maximum parse trees per lexicalization");
  app.add_option("--iri", config.ontologyIri, "Ontology IRI used in functional-syntax output");
  std::string ambiguityFile;
  app.add_option("--ambiguity", ambiguityFile, "Extra ambiguity patterns appended to the built-in ones");

  std::string sentence;
  std::string format = "dl";
  bool all = false;

  auto* parse = app.add_subcommand("parse", "Print lexicalizations and parse trees");
  parse->add_option("sentence", sentence, "Sentence to analyze")->required();

  auto* axioms = app.add_subcommand("axioms", "Print axiom alternatives");
  axioms->add_option("sentence", sentence, "Sentence to analyze")->required();
  axioms->add_option("--format", format, "Output format")->check(CLI::IsMember({"dl", "ofn", "json"}));
  axioms->add_flag("--all", all, "Print every alternative instead of the first");

  auto* ace = app.add_subcommand("ace", "Print the surface and tagged ACE forms");
  ace->add_option("sentence", sentence, "Sentence to analyze")->required();
  ace->add_flag("--all", all, "Print the forms of every alternative");

  std::string corpus, gold, report;
  bool serial = false;
  auto* batch = app.add_subcommand("batch", "Evaluate a corpus file");
  batch->add_option("corpus", corpus, "One sentence per line")->required();
  batch->add_option("--gold", gold, "Gold axioms, sentenceIndex<TAB>DL-axiom");
  batch->add_option("--report", report, "Write the JSON report to this file");
  batch->add_flag("--serial", serial, "Evaluate sentences one at a time");

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string data = "tedei-data";
  std::string web = "web";
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--host", host, "Address to bind");
  serve->add_option("--port", port, "Port to listen on")->check(CLI::Range(0, 65535));
  serve->add_option("--data", data, "Directory holding project files");
  serve->add_option("--static", web, "Directory served under /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    std::optional<tedei::PatternRegistry> registry;
    if (!ambiguityFile.empty()) {
      registry = tedei::PatternRegistry::load(ambiguityFile);
      config.registry = &*registry;
    }
    if (*parse) return cmdParse(sentence, config);
    if (*axioms) return cmdAxioms(sentence, format, all, config);
    if (*ace) return cmdAce(sentence, all, config);
    if (*batch) return cmdBatch(corpus, gold, report, serial, config);
    if (*serve) return cmdServe(host, port, data, web, config);
  } catch (const tedei::Error& e) {
    std::cerr << tedei::to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == tedei::ErrorCode::Io ? kExitIo : 1;
  }
  return kExitUsage;
}
