#include "tedei/lexicalizer.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "tedei/resources.hpp"

namespace tedei {

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool isPunct(char c) { return std::string_view(".,;:!?()\"'").find(c) != std::string_view::npos; }

bool isAllCaps(const std::string& w) {
  int letters = 0;
  for (unsigned char c : w) {
    if (std::isalpha(c)) {
      if (!std::isupper(c)) return false;
      ++letters;
    }
  }
  return letters >= 2;
}

bool isDigits(const std::string& w) {
  return !w.empty() && std::all_of(w.begin(), w.end(), [](unsigned char c) { return std::isdigit(c); });
}

PennTag punctTag(const std::string& s) {
  if (s == "." || s == "!" || s == "?") return ".";
  if (s == ",") return ",";
  if (s == ";" || s == ":") return ":";
  if (s == "(") return "-LRB-";
  if (s == ")") return "-RRB-";
  return "``";
}

bool isPunctToken(const Token& t) { return t.surface.size() == 1 && isPunct(t.surface[0]); }

constexpr std::string_view kNumberWords[] = {"zero",    "one",     "two",       "three",    "four",
                                             "five",    "six",     "seven",     "eight",    "nine",
                                             "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
                                             "fifteen", "sixteen", "seventeen", "eighteen", "nineteen",
                                             "twenty"};

bool isSubjectDeterminer(const std::string& lemma) {
  return lemma == "every" || lemma == "a" || lemma == "an" || lemma == "all" || lemma == "each";
}

std::optional<IdentifierKind> kindFromName(const std::string& s) {
  if (s == "CONCEPT") return IdentifierKind::Concept;
  if (s == "PROPERTY") return IdentifierKind::Property;
  if (s == "INDIVIDUAL") return IdentifierKind::Individual;
  return std::nullopt;
}

// "(MD)?(VB|VBZ)+" → "(?:(?:MD )?)..." over space-terminated tag strings.
std::string compileTagRegex(const std::string& src) {
  std::string out;
  for (std::size_t i = 0; i < src.size();) {
    char c = src[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '$') {
      std::size_t j = i;
      while (j < src.size() && (std::isalpha(static_cast<unsigned char>(src[j])) || src[j] == '$')) ++j;
      std::string tag = src.substr(i, j - i);
      out += "(?:";
      for (char t : tag) {
        if (t == '$') out += '\\';
        out += t;
      }
      out += " )";
      i = j;
    } else if (c == '(') {
      out += "(?:";
      ++i;
    } else if (c == ' ' || c == '\t') {
      ++i;
    } else {
      out += c;
      ++i;
    }
  }
  return out;
}

std::string tagString(const std::vector<Token>& tokens, TokenRange r) {
  std::string s;
  for (auto i = r.begin; i < r.end; ++i) {
    s += tokens[i].pos;
    s += ' ';
  }
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Lexicon

TaggerLexicon TaggerLexicon::parse(std::string_view text) {
  TaggerLexicon lex;
  bool in_suffix = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t == "[suffix]") {
      in_suffix = true;
      continue;
    }
    if (t == "[words]") {
      in_suffix = false;
      continue;
    }
    auto tab = t.find('\t');
    if (tab == std::string::npos)
      throw Error(ErrorCode::Config, "lexicon line " + std::to_string(lineno) + ": expected TAB");
    std::string key = trim(t.substr(0, tab));
    std::string tags = trim(t.substr(tab + 1));
    if (in_suffix) {
      if (key == "*") {
        lex.default_tag_ = tags;
      } else {
        if (key.size() < 2 || key[0] != '-')
          throw Error(ErrorCode::Config, "lexicon line " + std::to_string(lineno) + ": suffix must start with '-'");
        lex.suffix_rules_.emplace_back(lower(key.substr(1)), tags);
      }
      continue;
    }
    std::vector<PennTag> list;
    std::stringstream ts(tags);
    std::string tg;
    while (std::getline(ts, tg, ',')) {
      tg = trim(tg);
      if (!tg.empty()) list.push_back(tg);
    }
    if (list.empty()) throw Error(ErrorCode::Config, "lexicon line " + std::to_string(lineno) + ": no tags");
    lex.entries_[lower(key)] = std::move(list);
  }
  return lex;
}

TaggerLexicon TaggerLexicon::load(const std::string& path) { return parse(readFile(path)); }

const TaggerLexicon& TaggerLexicon::standard() {
  static const TaggerLexicon lex = [] {
    if (const char* p = std::getenv("TEDEI_LEXICON"); p && *p) return load(p);
    return parse(resources::lexicon());
  }();
  return lex;
}

const std::vector<PennTag>* TaggerLexicon::lookup(const std::string& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? nullptr : &it->second;
}

void TaggerLexicon::addEntry(const std::string& word, std::vector<PennTag> tags) {
  entries_[lower(word)] = std::move(tags);
}

void LexiconTagger::tagTokens(std::vector<Token>& tokens) const {
  for (auto& t : tokens) {
    if (isPunctToken(t)) {
      t.pos = punctTag(t.surface);
    } else if (isDigits(t.surface)) {
      t.pos = "CD";
    } else if (isAllCaps(t.surface)) {
      t.pos = "NNP";
    } else if (const auto* tags = lexicon_->lookup(t.lemma)) {
      t.pos = tags->front();
    } else if (t.index > 0 && std::isupper(static_cast<unsigned char>(t.surface[0]))) {
      t.pos = "NNP";
    } else {
      t.pos = lexicon_->defaultTag();
      for (const auto& [suffix, tg] : lexicon_->suffixRules()) {
        if (t.lemma.size() > suffix.size() && t.lemma.ends_with(suffix)) {
          t.pos = tg;
          break;
        }
      }
    }
  }
}

std::vector<Token> tokenize(std::string_view sentence) {
  std::vector<std::string> parts;
  std::istringstream in{std::string(sentence)};
  std::string chunk;
  while (in >> chunk) {
    std::size_t b = 0, e = chunk.size();
    std::vector<std::string> lead, trail;
    while (b < e && isPunct(chunk[b])) lead.emplace_back(1, chunk[b++]);
    while (e > b && isPunct(chunk[e - 1])) trail.emplace_back(1, chunk[--e]);
    for (auto& p : lead) parts.push_back(p);
    if (e > b) parts.push_back(chunk.substr(b, e - b));
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) parts.push_back(*it);
  }
  if (parts.empty()) throw Error(ErrorCode::EmptySentence, "empty sentence");
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Token t;
    t.surface = parts[i];
    t.index = i;
    if (isPunctToken(t)) {
      t.lemma = t.surface;
    } else {
      for (unsigned char c : t.surface)
        if (std::isalnum(c) || c == '-' || c == '\'') t.lemma += static_cast<char>(std::tolower(c));
      if (t.lemma.empty()) t.lemma = t.surface;
    }
    tokens.push_back(std::move(t));
  }
  return tokens;
}

std::vector<Token> tag(std::string_view sentence, const Tagger& tagger) {
  auto tokens = tokenize(sentence);
  tagger.tagTokens(tokens);
  return tokens;
}

std::vector<Token> tag(std::string_view sentence) {
  static const LexiconTagger tagger(TaggerLexicon::standard());
  return tag(sentence, tagger);
}

// ---------------------------------------------------------------------------
// Patterns

bool PatternRule::matches(const std::vector<Token>& tokens, TokenRange range) const {
  return std::regex_match(tagString(tokens, range), *compiled);
}

void PatternSet::add(IdentifierKind kind, const std::string& tag_regex) {
  PatternRule rule{kind, tag_regex, nullptr};
  try {
    rule.compiled = std::make_shared<const std::regex>(compileTagRegex(tag_regex), std::regex::optimize);
  } catch (const std::regex_error& e) {
    throw Error(ErrorCode::Config, "bad tag pattern '" + tag_regex + "': " + e.what());
  }
  rules_.push_back(std::move(rule));
}

PatternSet PatternSet::parse(std::string_view text) {
  PatternSet set;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto tab = t.find('\t');
    if (tab == std::string::npos)
      throw Error(ErrorCode::Config, "pattern line " + std::to_string(lineno) + ": expected TAB");
    auto kind = kindFromName(trim(t.substr(0, tab)));
    if (!kind) throw Error(ErrorCode::Config, "pattern line " + std::to_string(lineno) + ": unknown kind");
    set.add(*kind, trim(t.substr(tab + 1)));
  }
  for (auto k : {IdentifierKind::Concept, IdentifierKind::Property, IdentifierKind::Individual}) {
    if (std::none_of(set.rules_.begin(), set.rules_.end(), [k](const auto& r) { return r.kind == k; }))
      throw Error(ErrorCode::Config, "pattern set needs at least one rule per identifier kind");
  }
  return set;
}

PatternSet PatternSet::load(const std::string& path) { return parse(readFile(path)); }

const PatternSet& PatternSet::standard() {
  static const PatternSet set = [] {
    if (const char* p = std::getenv("TEDEI_PATTERNS"); p && *p) return load(p);
    return parse(resources::patterns());
  }();
  return set;
}

bool PatternSet::anyMatch(IdentifierKind kind, const std::vector<Token>& tokens, TokenRange range) const {
  auto tags = tagString(tokens, range);
  for (const auto& r : rules_)
    if (r.kind == kind && std::regex_match(tags, *r.compiled)) return true;
  return false;
}

std::string singularize(const std::string& word) {
  static const std::set<std::string> kInvariant = {"species", "series", "news", "maths", "mathematics",
                                                   "physics", "means", "aircraft", "sheep", "fish"};
  auto lw = lower(word);
  if (kInvariant.count(lw)) return word;
  auto keepCase = [&](std::size_t cut, const std::string& add) { return word.substr(0, word.size() - cut) + add; };
  if (lw.size() <= 3 || !lw.ends_with("s") || lw.ends_with("ss") || lw.ends_with("us") || lw.ends_with("is"))
    return word;
  if (lw.ends_with("ies")) return keepCase(3, "y");
  if (lw.ends_with("sses") || lw.ends_with("xes") || lw.ends_with("ches") || lw.ends_with("shes"))
    return keepCase(2, "");
  return keepCase(1, "");
}

std::optional<int> cardinalValue(const Token& token) {
  if (isDigits(token.surface)) {
    if (token.surface.size() > 9) return std::nullopt;
    return std::stoi(token.surface);
  }
  for (std::size_t i = 0; i < std::size(kNumberWords); ++i)
    if (token.lemma == kNumberWords[i]) return static_cast<int>(i);
  return std::nullopt;
}

Identifier makeIdentifier(const std::vector<Token>& tokens, TokenRange range, IdentifierKind kind) {
  Identifier id;
  id.kind = kind;
  for (auto i = range.begin; i < range.end; ++i)
    if (kind == IdentifierKind::Individual || tokens[i].pos != "DT") id.words.push_back(tokens[i].surface);
  if (id.words.empty())
    for (auto i = range.begin; i < range.end; ++i) id.words.push_back(tokens[i].surface);
  auto words = id.words;
  if (kind == IdentifierKind::Property && tokens[range.begin].pos == "JJ") words.insert(words.begin(), "is");
  id.canonical = canonicalIdentifier(words, kind);
  return id;
}

std::vector<IdentifierMatch> extractIdentifiers(const std::vector<Token>& tokens, const PatternSet& patterns) {
  constexpr std::size_t kMaxRun = 8;
  std::vector<IdentifierMatch> out;
  for (std::size_t b = 0; b < tokens.size(); ++b) {
    if (isPunctToken(tokens[b])) continue;
    std::size_t limit = std::min(tokens.size(), b + kMaxRun);
    for (std::size_t e = limit; e > b; --e) {
      bool has_punct = false;
      for (auto i = b; i < e; ++i) has_punct |= isPunctToken(tokens[i]);
      if (has_punct) continue;
      TokenRange r{b, e};
      for (auto k : {IdentifierKind::Concept, IdentifierKind::Individual, IdentifierKind::Property})
        if (patterns.anyMatch(k, tokens, r)) out.push_back({makeIdentifier(tokens, r, k), r});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct Option {
  bool residue = false;
  bool demoted = false;  // its last word could start an indicator
  TerminalSpan span;
  std::size_t end = 0;
  int order = 0;
};

int categoryOrder(const Option& o) {
  if (o.residue) return 0;
  switch (o.span.kind) {
    case SpanKind::Class: return 1;
    case SpanKind::Individual: return 2;
    case SpanKind::Property: return 3;
    case SpanKind::Cardinality: return 4;
    case SpanKind::Indicator: return 5 + static_cast<int>(*o.span.indicator);
  }
  return 99;
}

std::string spanKey(const std::vector<TerminalSpan>& spans) {
  std::string k;
  for (const auto& s : spans) {
    k += std::to_string(static_cast<int>(s.kind)) + ':' + std::to_string(s.range.begin) + '-' +
         std::to_string(s.range.end);
    if (s.indicator) k += ':' + std::to_string(static_cast<int>(*s.indicator));
    k += ';';
  }
  return k;
}

class Enumerator {
 public:
  Enumerator(const std::vector<Token>& tokens, const Lexicalizer& lx, std::size_t cap, const std::string& id)
      : tokens_(tokens), lx_(lx), cap_(cap), id_(id) {
    by_begin_.resize(tokens.size());
    for (auto& m : extractIdentifiers(tokens, lx.patterns())) by_begin_[m.range.begin].push_back(m);
  }

  Enumeration run() {
    dfs(0);
    result_.furthest = furthest_;
    return std::move(result_);
  }

 private:
  static constexpr std::size_t kStepLimit = 2'000'000;

  std::vector<Option> options(std::size_t pos) const {
    const auto& tok = tokens_[pos];
    std::vector<Option> opts;
    auto residue = [&](std::size_t len) {
      Option o;
      o.residue = true;
      o.end = pos + len;
      opts.push_back(o);
    };
    if (pos == 0 && isSubjectDeterminer(tok.lemma)) {
      residue(1);
      return opts;
    }
    if (pos + 1 == tokens_.size() && tok.pos == ".") {
      residue(1);
      return opts;
    }
    if (copula_window_ && (tok.lemma == "is" || tok.lemma == "are")) {
      std::size_t len = 1;
      if (pos + 1 < tokens_.size()) {
        const auto& nx = tokens_[pos + 1].lemma;
        if (nx == "a" || nx == "an" || nx == "the") len = 2;
      }
      residue(len);
    }
    for (const auto& m : by_begin_[pos]) {
      Option o;
      o.span.range = m.range;
      o.span.kind = m.identifier.kind == IdentifierKind::Concept      ? SpanKind::Class
                    : m.identifier.kind == IdentifierKind::Individual ? SpanKind::Individual
                                                                      : SpanKind::Property;
      o.end = m.range.end;
      opts.push_back(o);
    }
    if (auto v = cardinalValue(tok)) {
      Option o;
      o.span.kind = SpanKind::Cardinality;
      o.span.range = {pos, pos + 1};
      o.span.value = *v;
      o.end = pos + 1;
      opts.push_back(o);
    }
    for (const auto& m : lx_.tables().matchAt(tokens_, pos)) {
      Option o;
      o.span.kind = SpanKind::Indicator;
      o.span.indicator = m.kind;
      o.span.range = {pos, pos + m.length};
      o.end = pos + m.length;
      opts.push_back(o);
    }
    for (auto& o : opts) {
      o.order = categoryOrder(o);
      if (!o.residue && o.span.kind != SpanKind::Indicator && o.end > pos + 1)
        o.demoted = !lx_.tables().matchAt(tokens_, o.end - 1).empty();
    }
    // Copula residue first, then longest span first.
    std::stable_sort(opts.begin(), opts.end(), [](const Option& a, const Option& b) {
      if (a.residue != b.residue) return a.residue;
      if (a.demoted != b.demoted) return b.demoted;
      if (a.end != b.end) return a.end > b.end;
      return a.order < b.order;
    });
    return opts;
  }

  bool done() const { return result_.truncated; }

  void dfs(std::size_t pos) {
    if (done()) return;
    if (++steps_ > kStepLimit) {
      result_.truncated = true;
      return;
    }
    furthest_ = std::max(furthest_, pos);
    if (pos == tokens_.size()) {
      emit();
      return;
    }
    for (const auto& o : options(pos)) {
      if (done()) return;
      bool saved_window = copula_window_;
      bool saved_subject = subject_placed_;
      if (o.residue) {
        for (auto i = pos; i < o.end; ++i) residue_.push_back(i);
        if (pos != 0 || !isSubjectDeterminer(tokens_[0].lemma)) copula_window_ = false;
      } else {
        spans_.push_back(o.span);
        copula_window_ = !subject_placed_;
        subject_placed_ = true;
      }
      dfs(o.end);
      if (o.residue)
        residue_.resize(residue_.size() - (o.end - pos));
      else
        spans_.pop_back();
      copula_window_ = saved_window;
      subject_placed_ = saved_subject;
    }
  }

  void emit() {
    if (!seen_.insert(spanKey(spans_)).second) return;
    if (result_.lexicalizations.size() >= cap_) {
      result_.truncated = true;
      return;
    }
    Lexicalization lex;
    lex.sentenceId = id_;
    lex.tokens = tokens_;
    lex.spans = spans_;
    lex.residue = residue_;
    result_.lexicalizations.push_back(std::move(lex));
  }

  const std::vector<Token>& tokens_;
  const Lexicalizer& lx_;
  std::size_t cap_;
  std::string id_;
  std::vector<std::vector<IdentifierMatch>> by_begin_;

  std::vector<TerminalSpan> spans_;
  std::vector<std::size_t> residue_;
  bool subject_placed_ = false;
  bool copula_window_ = false;
  std::size_t steps_ = 0;
  std::size_t furthest_ = 0;
  std::set<std::string> seen_;
  Enumeration result_;
};

}  // namespace

Enumeration Lexicalizer::enumerate(const std::vector<Token>& tokens, std::size_t cap,
                                   const std::string& sentence_id) const {
  if (cap < 1) throw Error(ErrorCode::Config, "lexicalization cap must be at least 1");
  if (tokens.empty()) return {};
  return Enumerator(tokens, *this, cap, sentence_id).run();
}

}  // namespace tedei
