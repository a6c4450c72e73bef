#include "tedei/ace.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace tedei {

namespace {

enum class TermKind { None, Concept, Relation, Individual };

struct Piece {
  std::vector<std::string> words;
  TermKind term = TermKind::None;
  bool attach = false;  // no space before (",")
};

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool startsWithVowel(const std::string& w) {
  if (w.empty()) return false;
  char c = static_cast<char>(std::tolower(static_cast<unsigned char>(w[0])));
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool isAllCaps(const std::string& w) {
  bool letter = false;
  for (unsigned char c : w) {
    if (std::islower(c)) return false;
    letter |= std::isalpha(c) != 0;
  }
  return letter;
}

std::string article(const std::string& next_word) { return startsWithVowel(next_word) ? "an" : "a"; }

std::string thirdPerson(const std::string& verb) {
  auto v = lower(verb);
  if (v == "have") return "has";
  if (v == "are") return "is";
  if (v == "do") return "does";
  if (v == "go") return "goes";
  auto ends = [&](std::string_view s) { return v.ends_with(s); };
  if (ends("s") || ends("sh") || ends("ch") || ends("x") || ends("z") || ends("o")) return verb + "es";
  if (v.size() > 1 && ends("y") && !startsWithVowel(v.substr(v.size() - 2, 1))) return verb.substr(0, verb.size() - 1) + "ies";
  return verb + "s";
}

std::vector<std::string> spanWords(const Lexicalization& lex, std::size_t span) {
  return lex.words(lex.spans[span]);
}

// The subject is rendered singular (with agreeing verbs) when a determiner is
// inserted in front of a bare plural.
struct Agreement {
  bool singularize = false;
};

// Determiners inside a relation ("native to a") are dropped, as in its name.
std::vector<std::string> propertyWords(const Lexicalization& lex, std::size_t span, const Agreement& ag) {
  const auto& r = lex.spans[span].range;
  std::vector<std::string> words;
  bool inflected = !ag.singularize;
  for (auto i = r.begin; i < r.end; ++i) {
    const auto& pos = lex.tokens[i].pos;
    if (pos == "DT" && r.size() > 1) continue;
    auto w = lex.tokens[i].surface;
    if (!inflected) {
      if (pos == "VBP") w = thirdPerson(w);
      if (pos == "MD" || pos.starts_with("VB")) inflected = true;
    }
    words.push_back(w);
  }
  return words;
}

bool prepositional(const Lexicalization& lex, std::size_t property_span) {
  const auto& r = lex.spans[property_span].range;
  const auto& pos = lex.tokens[r.end - 1].pos;
  return pos == "IN" || pos == "TO";
}

class Renderer {
 public:
  Renderer(const Interpretation& in) : in_(in), lex_(*in.lexicalization) {}

  std::vector<Piece> run() {
    subject();
    copula();
    const auto& c = in_.clause;
    for (std::size_t i = 0; i < c.parts.size(); ++i) {
      if (i > 0) join(c.joins[i - 1]);
      part(c.parts[i], i == 0);
    }
    return std::move(out_);
  }

 private:
  void word(std::string w) { out_.push_back({{std::move(w)}, TermKind::None, false}); }
  void term(std::vector<std::string> ws, TermKind k) { out_.push_back({std::move(ws), k, false}); }
  void indicatorWords(std::size_t span) {
    for (auto& w : spanWords(lex_, span)) word(lower(w));
  }

  void subject() {
    std::size_t s = in_.clause.subject;
    auto words = spanWords(lex_, s);
    bool individual = lex_.spans[s].kind == SpanKind::Individual;
    if (auto det = lex_.subjectDeterminer()) {
      word(lex_.tokens[0].surface);
    } else if (!individual) {
      auto kind = subjectKind(lex_, s);
      ag_.singularize = kind == "bare-plural";
      if (ag_.singularize) words.back() = singularize(words.back());
      const auto& first = lex_.tokens[lex_.spans[s].range.begin];
      if (first.pos != "NNP" && first.pos != "NNPS" && !isAllCaps(words[0]))
        words[0][0] = static_cast<char>(std::tolower(static_cast<unsigned char>(words[0][0])));
      if (in_.form == InterpretationForm::Definitional) word("Every");
      else word(startsWithVowel(words[0]) ? "An" : "A");
    }
    term(words, individual ? TermKind::Individual : TermKind::Concept);
  }

  void copula() {
    auto cop = lex_.copula();
    copula_article_ = false;
    for (std::size_t k = 0; k < cop.size(); ++k) {
      auto w = lex_.tokens[cop[k]].surface;
      if (k == 0 && ag_.singularize && lower(w) == "are") w = "is";
      word(w);
      copula_article_ = lex_.tokens[cop[k]].pos == "DT";
    }
  }

  void join(const Join& j) {
    if (j.kind == JoinKind::Comma) {
      out_.push_back({{","}, TermKind::None, true});
      return;
    }
    if (j.span) {
      indicatorWords(*j.span);
      return;
    }
    word(j.kind == JoinKind::Or ? "or" : "and");
  }

  void filler(const ClausePart& p) {
    if (p.filler) term(spanWords(lex_, *p.filler), TermKind::Concept);
  }

  void relation(const ClausePart& p) { term(propertyWords(lex_, *p.property, ag_), TermKind::Relation); }

  void part(const ClausePart& p, bool first) {
    switch (p.kind) {
      case PartKind::Class: {
        auto ws = spanWords(lex_, *p.filler);
        const auto& r = lex_.spans[*p.filler].range;
        bool adjective = std::all_of(lex_.tokens.begin() + static_cast<std::ptrdiff_t>(r.begin),
                                     lex_.tokens.begin() + static_cast<std::ptrdiff_t>(r.end),
                                     [](const Token& t) { return t.pos == "JJ"; });
        if (!(first && copula_article_) && !adjective) word(article(ws[0]));
        term(ws, TermKind::Concept);
        return;
      }
      case PartKind::Exists:
        relation(p);
        if (!p.filler) {
          word("something");
          return;
        }
        if (p.indicator) indicatorWords(*p.indicator);
        else if (!prepositional(lex_, *p.property)) word("some");
        filler(p);
        return;
      case PartKind::Forall:
        if (p.forced) {
          relation(p);
          word("only");
        } else if (p.indicatorFirst) {
          indicatorWords(*p.indicator);
          relation(p);
        } else {
          relation(p);
          indicatorWords(*p.indicator);
        }
        if (p.filler) filler(p);
        else word("something");
        return;
      case PartKind::Exact:
      case PartKind::Min:
      case PartKind::Max: {
        relation(p);
        std::vector<std::size_t> spans;
        if (p.indicator) spans.push_back(*p.indicator);
        if (p.cardinal) spans.push_back(*p.cardinal);
        std::sort(spans.begin(), spans.end());
        for (auto s : spans) indicatorWords(s);
        if (p.filler) filler(p);
        else word("things");
        return;
      }
      case PartKind::Value:
        relation(p);
        term(spanWords(lex_, *p.individual), TermKind::Individual);
        return;
      case PartKind::Self:
        relation(p);
        indicatorWords(*p.indicator);
        return;
      case PartKind::NegExists:
        if (p.indicatorFirst) {
          indicatorWords(*p.indicator);
          relation(p);
        } else {
          relation(p);
          indicatorWords(*p.indicator);
        }
        filler(p);
        return;
    }
  }

  const Interpretation& in_;
  const Lexicalization& lex_;
  Agreement ag_;
  bool copula_article_ = false;
  std::vector<Piece> out_;
};

std::string joinPieces(const std::vector<Piece>& pieces, bool hyphenate) {
  std::string s;
  for (const auto& p : pieces) {
    std::string text;
    for (std::size_t i = 0; i < p.words.size(); ++i) {
      if (i) text += (hyphenate && p.term != TermKind::None) ? "-" : " ";
      text += p.words[i];
    }
    if (!s.empty() && !p.attach) s += ' ';
    s += text;
  }
  return s + ".";
}

// ---- term keys shared by the tagger and the reader

struct TermInfo {
  TermKind kind;
  std::string name;
};

std::string keyOf(const std::vector<std::string>& words) {
  std::string k;
  for (const auto& w : words) k += (k.empty() ? "" : "-") + lower(w);
  return k;
}

std::map<std::string, TermInfo> termTable(const Lexicalization& lex) {
  std::map<std::string, TermInfo> t;
  auto put = [&](const std::vector<std::string>& ws, TermInfo info) { t.emplace(keyOf(ws), info); };
  for (std::size_t i = 0; i < lex.spans.size(); ++i) {
    const auto& s = lex.spans[i];
    auto ws = lex.words(s);
    switch (s.kind) {
      case SpanKind::Class: {
        put(ws, {TermKind::Concept, conceptName(lex, i)});
        auto sing = ws;
        sing.back() = singularize(sing.back());
        put(sing, {TermKind::Concept, subjectName(lex, i)});
        break;
      }
      case SpanKind::Individual: put(ws, {TermKind::Individual, individualName(lex, i)}); break;
      case SpanKind::Property:
        put(ws, {TermKind::Relation, propertyName(lex, i)});
        put(propertyWords(lex, i, Agreement{false}), {TermKind::Relation, propertyName(lex, i)});
        put(propertyWords(lex, i, Agreement{true}), {TermKind::Relation, propertyName(lex, i)});
        break;
      default: break;
    }
  }
  // The subject's own naming wins over a same-spelled filler.
  if (!lex.spans.empty()) {
    std::size_t subj = 0;
    auto ws = lex.words(lex.spans[subj]);
    if (lex.spans[subj].kind == SpanKind::Class) {
      auto sing = ws;
      sing.back() = singularize(sing.back());
      t[keyOf(sing)] = {TermKind::Concept, subjectName(lex, subj)};
    }
  }
  return t;
}

bool isSubjectDet(const std::string& w) {
  static const std::set<std::string> k{"every", "a", "an", "all", "each"};
  return k.count(lower(w)) > 0;
}

bool isNumberWord(const std::string& w) {
  Token t{w, lower(w), "CD", 0};
  return cardinalValue(t).has_value();
}

std::vector<std::string> splitWords(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(cur);
    cur.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) flush();
    else if (c == ',') {
      flush();
      out.push_back(",");
    } else cur += c;
  }
  flush();
  if (!out.empty() && out.back().ends_with(".")) {
    out.back().pop_back();
    if (out.back().empty()) out.pop_back();
  }
  return out;
}

const char* prefixOf(TermKind k) {
  switch (k) {
    case TermKind::Concept: return "n:";
    case TermKind::Relation: return "v:";
    case TermKind::Individual: return "p:";
    default: return "";
  }
}

}  // namespace

std::string surfaceTransform(const Interpretation& interp, const SurfaceOptions& opts) {
  if (!interp.lexicalization) throw Error(ErrorCode::InternalInconsistency, "interpretation without lexicalization");
  return joinPieces(Renderer(interp).run(), opts.hyphenate);
}

std::string tagTransform(std::string_view ace_text, const Lexicalization& lex) {
  auto words = splitWords(ace_text);
  if (words.empty()) throw Error(ErrorCode::InternalInconsistency, "empty ACE text");
  auto terms = termTable(lex);
  const auto& tables = IndicatorTables::standard();
  static const std::set<std::string> kFunction{"some", "something", "only", "things", "a", "an", "the",
                                               "and", "or", "that", ",", "is", "are"};
  std::vector<Token> word_tokens;
  for (const auto& w : words) word_tokens.push_back({w, lower(w), "", word_tokens.size()});
  std::vector<std::string> out;
  std::size_t i = 0;
  if (words.size() > 1 && isSubjectDet(words[0]) && terms.count(lower(words[1]))) out.push_back(words[i++]);
  bool subject_done = false;
  std::size_t copula_left = lex.copula().size();
  TermKind prev = TermKind::None;
  for (; i < words.size(); ++i) {
    const auto& w = words[i];
    if (subject_done && copula_left > 0) {
      out.push_back(w);
      --copula_left;
      prev = TermKind::None;
      continue;
    }
    std::size_t phrase = 0;
    for (const auto& m : tables.matchAt(word_tokens, i)) phrase = std::max(phrase, m.length);
    if (subject_done && phrase > 1) {
      for (std::size_t k = 0; k < phrase; ++k) out.push_back(words[i + k]);
      i += phrase - 1;
      prev = TermKind::None;
      continue;
    }
    auto it = terms.find(lower(w));
    if (it != terms.end()) {
      if (it->second.kind == TermKind::Concept && prev == TermKind::Relation) out.push_back(article(w));
      out.push_back(prefixOf(it->second.kind) + w);
      prev = it->second.kind;
      subject_done = true;
      continue;
    }
    if (!subject_done)
      throw Error(ErrorCode::InternalInconsistency, "cannot classify subject word '" + w + "'");
    if (kFunction.count(lower(w)) || tables.containsWord(lower(w)) || isNumberWord(w)) {
      out.push_back(w);
      prev = TermKind::None;
      continue;
    }
    throw Error(ErrorCode::InternalInconsistency, "cannot classify word '" + w + "' in ACE text");
  }
  std::string s;
  for (const auto& w : out) {
    if (!s.empty() && w != ",") s += ' ';
    s += w;
  }
  return s + ".";
}

// ---------------------------------------------------------------------------
// Tagged ACE reader

namespace {

class AceReader {
 public:
  AceReader(std::vector<std::string> words, const Lexicalization& lex, const IndicatorTables& tables)
      : w_(std::move(words)), terms_(termTable(lex)), tables_(tables), copula_(lex.copula().size()) {}

  AceReading run() {
    AceReading r;
    if (i_ < w_.size() && isSubjectDet(w_[i_])) ++i_;
    if (!isTerm(TermKind::Concept) && !isTerm(TermKind::Individual)) fail("expected the subject term");
    r.subject = cx::atomic(name());
    ++i_;
    i_ += copula_;
    std::vector<ClassExprPtr> disjuncts, conj;
    conj.push_back(part());
    while (i_ < w_.size()) {
      auto c = lower(w_[i_]);
      if (c == "or" && !startsCard()) {
        ++i_;
        disjuncts.push_back(cx::conjoin(std::move(conj)));
        conj.clear();
      } else if (c == "and" || c == "," || c == "that" || c == "which" || c == "who" || c == "whose") {
        ++i_;
      } else {
        fail("expected a connective");
      }
      conj.push_back(part());
    }
    disjuncts.push_back(cx::conjoin(std::move(conj)));
    r.rhs = cx::disjoin(std::move(disjuncts));
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    std::string at = i_ < w_.size() ? "'" + w_[i_] + "'" : "end of sentence";
    throw Error(ErrorCode::Parse, "tagged ACE: " + why + " at " + at);
  }

  static TermKind kindOfPrefix(const std::string& w) {
    if (w.starts_with("n:")) return TermKind::Concept;
    if (w.starts_with("v:")) return TermKind::Relation;
    if (w.starts_with("p:")) return TermKind::Individual;
    return TermKind::None;
  }
  bool isTerm(TermKind k) const { return i_ < w_.size() && kindOfPrefix(w_[i_]) == k; }
  std::string name() const {
    auto body = w_[i_].substr(2);
    auto it = terms_.find(lower(body));
    if (it != terms_.end()) return it->second.name;
    std::vector<std::string> parts;
    std::string cur;
    for (char c : body) {
      if (c == '-') {
        parts.push_back(cur);
        cur.clear();
      } else cur += c;
    }
    parts.push_back(cur);
    auto k = kindOfPrefix(w_[i_]);
    return canonicalIdentifier(parts, k == TermKind::Relation   ? IdentifierKind::Property
                                      : k == TermKind::Individual ? IdentifierKind::Individual
                                                                  : IdentifierKind::Concept);
  }

  // Longest indicator phrase of `kind` at the cursor; returns its length or 0.
  std::size_t phraseAt(IndicatorKind kind, std::size_t at) const {
    std::size_t best = 0;
    for (const auto& ph : tables_.phrases(kind)) {
      if (at + ph.size() > w_.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < ph.size() && ok; ++k) ok = lower(w_[at + k]) == ph[k];
      if (ok) best = std::max(best, ph.size());
    }
    return best;
  }
  bool eatPhrase(IndicatorKind kind) {
    auto n = phraseAt(kind, i_);
    i_ += n;
    return n > 0;
  }
  std::optional<int> number(std::size_t at) const {
    if (at >= w_.size()) return std::nullopt;
    return cardinalValue(Token{w_[at], lower(w_[at]), "CD", 0});
  }
  bool startsCard() const {
    return phraseAt(IndicatorKind::PostMinCard, i_) > 0 || phraseAt(IndicatorKind::PostMaxCard, i_) > 0;
  }

  ClassExprPtr conceptOrThing() {
    if (isTerm(TermKind::Concept)) {
      auto c = cx::atomic(name());
      ++i_;
      return c;
    }
    if (i_ < w_.size() && (lower(w_[i_]) == "things" || lower(w_[i_]) == "something")) {
      ++i_;
      return cx::top();
    }
    return cx::top();
  }

  std::string relation() {
    if (!isTerm(TermKind::Relation)) fail("expected a relation term");
    auto p = name();
    ++i_;
    return p;
  }

  ClassExprPtr cardinality(const std::string& p) {
    std::size_t save = i_;
    std::optional<IndicatorKind> pre;
    for (auto k : {IndicatorKind::ExactCardinality, IndicatorKind::AmbiExactCard, IndicatorKind::PreMinCard,
                   IndicatorKind::PreMaxCard}) {
      auto n = phraseAt(k, i_);
      if (n > 0 && number(i_ + n)) {
        pre = k;
        i_ += n;
        break;
      }
    }
    std::string pre_words;
    for (auto k = save; k < i_; ++k) pre_words += (pre_words.empty() ? "" : " ") + lower(w_[k]);
    auto n = number(i_);
    if (!n) {
      i_ = save;
      return nullptr;
    }
    ++i_;
    PartKind kind = PartKind::Exact;
    if (pre == IndicatorKind::PreMinCard) kind = PartKind::Min;
    if (pre == IndicatorKind::PreMaxCard) kind = PartKind::Max;
    if (!pre) {
      if (eatPhrase(IndicatorKind::PostMinCard)) kind = PartKind::Min;
      else if (eatPhrase(IndicatorKind::PostMaxCard)) kind = PartKind::Max;
    }
    int v = *n;
    if (pre_words == "more than") v += 1;
    if (pre_words == "less than" && v > 0) v -= 1;
    auto f = conceptOrThing();
    if (kind == PartKind::Min) return cx::min(v, p, f);
    if (kind == PartKind::Max) return cx::max(v, p, f);
    return cx::exactly(v, p, f);
  }

  ClassExprPtr part() {
    if (i_ >= w_.size()) fail("expected a class or restriction");
    auto lw = lower(w_[i_]);
    if ((lw == "a" || lw == "an") && i_ + 1 < w_.size() && kindOfPrefix(w_[i_ + 1]) == TermKind::Concept) ++i_;
    if (isTerm(TermKind::Concept)) {
      auto c = cx::atomic(name());
      ++i_;
      return c;
    }
    if (eatPhrase(IndicatorKind::PreComplement)) {
      auto p = relation();
      eatPhrase(IndicatorKind::Existential);
      return cx::complement(cx::some(p, conceptOrThing()));
    }
    if (!isTerm(TermKind::Relation) && eatPhrase(IndicatorKind::Universal)) {
      auto p = relation();
      return cx::only(p, conceptOrThing());
    }
    auto p = relation();
    if (i_ >= w_.size()) return cx::some(p, cx::top());
    if (lower(w_[i_]) == "something") {
      ++i_;
      return cx::some(p, cx::top());
    }
    if (isTerm(TermKind::Individual)) {
      auto ind = name();
      ++i_;
      return cx::has_value(p, ind);
    }
    if (eatPhrase(IndicatorKind::Self)) return cx::has_self(p);
    if (auto c = cardinality(p)) return c;
    if (eatPhrase(IndicatorKind::Universal)) return cx::only(p, conceptOrThing());
    if (eatPhrase(IndicatorKind::PostComplement)) return cx::complement(cx::some(p, conceptOrThing()));
    eatPhrase(IndicatorKind::Existential);
    return cx::some(p, conceptOrThing());
  }

  std::vector<std::string> w_;
  std::map<std::string, TermInfo> terms_;
  const IndicatorTables& tables_;
  std::size_t copula_;
  std::size_t i_ = 0;
};

}  // namespace

AceReading fromTaggedAce(std::string_view tagged, const Lexicalization& lex, const IndicatorTables& tables) {
  return AceReader(splitWords(tagged), lex, tables).run();
}

}  // namespace tedei
