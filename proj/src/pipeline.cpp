#include "tedei/pipeline.hpp"

#include <set>

namespace tedei {

Analysis analyze(const std::string& sentence, const PipelineConfig& config, const std::string& sentence_id) {
  const auto& patterns = config.patterns ? *config.patterns : PatternSet::standard();
  const auto& tables = config.tables ? *config.tables : IndicatorTables::standard();

  Analysis a;
  a.sentence = sentence;
  a.sentenceId = sentence_id;
  a.tokens = tag(sentence);

  Lexicalizer lexicalizer(patterns, tables);
  auto en = lexicalizer.enumerate(a.tokens, config.lexicalizationCap, sentence_id);
  a.lexicalizationCount = en.lexicalizations.size();
  a.lexicalizationsTruncated = en.truncated;

  std::size_t furthest_token = 0;
  std::set<std::string> seen;
  InterpretOptions iopts{config.registry, &patterns};
  for (std::size_t li = 0; li < en.lexicalizations.size(); ++li) {
    auto lex = std::make_shared<const Lexicalization>(std::move(en.lexicalizations[li]));
    auto rec = recognizeAll(*lex, config.treeCap);
    if (rec.trees.empty()) {
      std::size_t tok = rec.furthest < lex->spans.size() ? lex->spans[rec.furthest].range.begin : a.tokens.size();
      furthest_token = std::max(furthest_token, tok);
      continue;
    }
    a.parsed.push_back({lex, rec.trees, rec.truncated});
    for (std::size_t ti = 0; ti < rec.trees.size(); ++ti) {
      auto interps = interpret(rec.trees[ti], lex, iopts);
      a.interpretationCount += interps.size();
      for (auto& in : interps) {
        in.lexicalizationIndex = li;
        in.treeIndex = ti;
        Axiom ax = toAxiom(in, sentence_id);
        auto dl = serializeDL(ax);
        if (!seen.insert(dl).second) continue;
        Alternative alt;
        alt.aceSurface = surfaceTransform(in);
        alt.aceTagged = tagTransform(alt.aceSurface, *lex);
        alt.dl = dl;
        alt.functional = functionalAxiom(ax);
        alt.axiom = std::move(ax);
        alt.interpretation = std::move(in);
        a.alternatives.push_back(std::move(alt));
      }
    }
  }
  a.tedei = !a.parsed.empty();
  if (!a.tedei) {
    bool none = a.lexicalizationCount == 0;
    std::size_t tok = none ? en.furthest : furthest_token;
    if (tok < a.tokens.size()) a.failToken = tok;
    a.diagnostics = diagnose(a.tokens, a.failToken, none);
  }
  return a;
}

nlohmann::json analysisToJson(const Analysis& a) {
  nlohmann::json j;
  j["sentence"] = a.sentence;
  j["tedei"] = a.tedei;
  j["diagnostics"] = a.diagnostics;
  j["failToken"] = a.failToken ? nlohmann::json(*a.failToken) : nlohmann::json(nullptr);
  j["lexicalizations"] = a.lexicalizationCount;
  j["tedeiLexicalizations"] = a.parsed.size();
  j["interpretations"] = a.interpretationCount;
  j["truncated"] = a.lexicalizationsTruncated;
  auto tokens = nlohmann::json::array();
  for (const auto& t : a.tokens) tokens.push_back({{"surface", t.surface}, {"pos", t.pos}});
  j["tokens"] = tokens;
  auto alts = nlohmann::json::array();
  for (std::size_t i = 0; i < a.alternatives.size(); ++i) {
    const auto& alt = a.alternatives[i];
    const auto& in = alt.interpretation;
    alts.push_back({{"index", i},
                    {"aceSurface", alt.aceSurface},
                    {"aceTagged", alt.aceTagged},
                    {"dl", alt.dl},
                    {"functional", alt.functional},
                    {"axiom", axiomToJson(alt.axiom)},
                    {"provenance",
                     {{"lexicalizationIndex", in.lexicalizationIndex},
                      {"treeIndex", in.treeIndex},
                      {"interpretationIndex", in.interpretationIndex},
                      {"form", to_string(in.form)},
                      {"quantifier", to_string(in.quantifier)},
                      {"patterns", in.patterns},
                      {"approximateCardinality", in.approximateCardinality}}}});
  }
  j["alternatives"] = alts;
  return j;
}

}  // namespace tedei
