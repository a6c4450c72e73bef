#pragma once

// Lexical ambiguity handling: POS tagging, identifier extraction by tag
// patterns, and enumeration of all segmentations into terminal spans.

#include <map>
#include <memory>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

#include "tedei/indicators.hpp"
#include "tedei/model.hpp"

namespace tedei {

class TaggerLexicon {
 public:
  // Parses the `word<TAB>TAG[,TAG...]` format with an optional `[suffix]` section.
  static TaggerLexicon parse(std::string_view text);
  static TaggerLexicon load(const std::string& path);
  // Bundled lexicon, or the file named by TEDEI_LEXICON when set.
  static const TaggerLexicon& standard();

  const std::vector<PennTag>* lookup(const std::string& lowercase_word) const;
  const std::vector<std::pair<std::string, PennTag>>& suffixRules() const { return suffix_rules_; }
  const PennTag& defaultTag() const { return default_tag_; }

  void addEntry(const std::string& word, std::vector<PennTag> tags);

 private:
  std::map<std::string, std::vector<PennTag>> entries_;
  std::vector<std::pair<std::string, PennTag>> suffix_rules_;
  PennTag default_tag_ = "NN";
};

// Anything that assigns one Penn tag per token.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual void tagTokens(std::vector<Token>& tokens) const = 0;
};

class LexiconTagger : public Tagger {
 public:
  explicit LexiconTagger(const TaggerLexicon& lexicon) : lexicon_(&lexicon) {}
  void tagTokens(std::vector<Token>& tokens) const override;

 private:
  const TaggerLexicon* lexicon_;
};

// Splits on whitespace and separates leading/trailing punctuation.
// Throws EmptySentence for blank input.
std::vector<Token> tokenize(std::string_view sentence);

// tokenize + tag with the bundled lexicon tagger.
std::vector<Token> tag(std::string_view sentence);
std::vector<Token> tag(std::string_view sentence, const Tagger& tagger);

struct PatternRule {
  IdentifierKind kind;
  std::string tagSequence;  // e.g. "(JJ|NN)*(NN|NNS)"

  bool matches(const std::vector<Token>& tokens, TokenRange range) const;

  // compiled form over space-terminated tag strings
  std::shared_ptr<const std::regex> compiled;
};

class PatternSet {
 public:
  // `KIND<TAB>tag-regex` per line, KIND ∈ {CONCEPT, PROPERTY, INDIVIDUAL}.
  static PatternSet parse(std::string_view text);
  static PatternSet load(const std::string& path);
  // Bundled rules, or the file named by TEDEI_PATTERNS when set.
  static const PatternSet& standard();

  void add(IdentifierKind kind, const std::string& tag_regex);
  const std::vector<PatternRule>& rules() const { return rules_; }
  bool anyMatch(IdentifierKind kind, const std::vector<Token>& tokens, TokenRange range) const;

 private:
  std::vector<PatternRule> rules_;
};

struct IdentifierMatch {
  Identifier identifier;
  TokenRange range;
};

// Names an identifier from its token run: determiners are dropped, a property
// headed by an adjective ("native to") is named as a copular relation ("isNativeTo").
Identifier makeIdentifier(const std::vector<Token>& tokens, TokenRange range, IdentifierKind kind);

std::string singularize(const std::string& word);

// Number words "zero".."twenty" and digit strings.
std::optional<int> cardinalValue(const Token& token);

// Every contiguous run (maximal and sub-maximal) matching some rule.
std::vector<IdentifierMatch> extractIdentifiers(const std::vector<Token>& tokens,
                                                const PatternSet& patterns = PatternSet::standard());

struct Enumeration {
  std::vector<Lexicalization> lexicalizations;
  bool truncated = false;
  // Furthest token index any partial segmentation reached.
  std::size_t furthest = 0;
};

constexpr std::size_t kDefaultLexicalizationCap = 10000;

class Lexicalizer {
 public:
  Lexicalizer(const PatternSet& patterns = PatternSet::standard(),
              const IndicatorTables& tables = IndicatorTables::standard())
      : patterns_(&patterns), tables_(&tables) {}

  Enumeration enumerate(const std::vector<Token>& tokens, std::size_t cap = kDefaultLexicalizationCap,
                        const std::string& sentence_id = {}) const;

  const PatternSet& patterns() const { return *patterns_; }
  const IndicatorTables& tables() const { return *tables_; }

 private:
  const PatternSet* patterns_;
  const IndicatorTables* tables_;
};

}  // namespace tedei
