#include "tedei/model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace tedei {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::string_view kSpanNames[] = {"CLASS", "INDIVIDUAL", "PROPERTY", "CARDINALITY",
                                           "INDICATOR"};

constexpr std::string_view kIndicatorNames[] = {
    "unionInd",      "intersectionInd", "preComplementInd", "postComplementInd", "universalInd",
    "existentialInd", "exactCardinalityInd", "ambiExactCardInd", "preMinCardInd",
    "postMinCardInd", "preMaxCardInd", "postMaxCardInd", "selfInd", "clsExpInd"};

bool isDeterminerWord(const std::string& lemma) {
  return lemma == "every" || lemma == "a" || lemma == "an" || lemma == "all" || lemma == "each";
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool allCaps(const std::string& w) {
  int letters = 0;
  for (unsigned char c : w) {
    if (std::isalpha(c)) {
      if (!std::isupper(c)) return false;
      ++letters;
    }
  }
  return letters >= 2;
}

std::string capitalized(const std::string& w) {
  if (allCaps(w)) return w;
  std::string out = lower(w);
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

}  // namespace

std::string_view to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::EmptySentence: return "EmptySentence";
    case ErrorCode::EmptyIdentifier: return "EmptyIdentifier";
    case ErrorCode::InvalidIri: return "InvalidIri";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Config: return "Config";
  }
  return "Unknown";
}

std::string_view to_string(SpanKind k) { return kSpanNames[static_cast<int>(k)]; }
std::string_view to_string(IndicatorKind k) { return kIndicatorNames[static_cast<int>(k)]; }

std::optional<IndicatorKind> indicator_from_string(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kIndicatorNames); ++i)
    if (kIndicatorNames[i] == name) return static_cast<IndicatorKind>(i);
  // the printed grammar uses two spellings for a few sets
  if (name == "preCompInd") return IndicatorKind::PreComplement;
  if (name == "postCompInd") return IndicatorKind::PostComplement;
  if (name == "exactCardInd") return IndicatorKind::ExactCardinality;
  return std::nullopt;
}

void TerminalSpan::validate() const {
  if (range.size() == 0) throw Error(ErrorCode::InternalInconsistency, "empty terminal span");
  if (indicator.has_value() != (kind == SpanKind::Indicator))
    throw Error(ErrorCode::InternalInconsistency, "indicator kind present iff INDICATOR span");
  if (value.has_value() != (kind == SpanKind::Cardinality))
    throw Error(ErrorCode::InternalInconsistency, "value present iff CARDINALITY span");
  if (value && *value < 0) throw Error(ErrorCode::InternalInconsistency, "negative cardinality");
}

void Lexicalization::validate() const {
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (tokens[i].index != i || tokens[i].surface.empty())
      throw Error(ErrorCode::InternalInconsistency, "token indices must be contiguous from 0");
  std::vector<int> cover(tokens.size(), 0);
  std::size_t last_end = 0;
  for (const auto& s : spans) {
    s.validate();
    if (s.range.begin < last_end || s.range.end > tokens.size())
      throw Error(ErrorCode::InternalInconsistency, "spans overlap or are out of order");
    last_end = s.range.end;
    for (auto i = s.range.begin; i < s.range.end; ++i) ++cover[i];
  }
  for (auto r : residue) {
    if (r >= tokens.size()) throw Error(ErrorCode::InternalInconsistency, "residue out of range");
    ++cover[r];
  }
  for (int c : cover)
    if (c != 1) throw Error(ErrorCode::InternalInconsistency, "spans and residue must partition tokens");
}

std::vector<std::string> Lexicalization::words(const TerminalSpan& span) const {
  std::vector<std::string> out;
  for (auto i = span.range.begin; i < span.range.end; ++i) out.push_back(tokens[i].surface);
  return out;
}

std::string Lexicalization::text(const TerminalSpan& span) const {
  std::string out;
  for (auto i = span.range.begin; i < span.range.end; ++i) {
    if (!out.empty()) out += ' ';
    out += tokens[i].surface;
  }
  return out;
}

std::optional<std::string> Lexicalization::subjectDeterminer() const {
  if (!tokens.empty() && std::find(residue.begin(), residue.end(), 0) != residue.end() &&
      isDeterminerWord(tokens[0].lemma))
    return tokens[0].lemma;
  return std::nullopt;
}

std::vector<std::size_t> Lexicalization::copula() const {
  std::vector<std::size_t> out;
  for (auto r : residue) {
    if (r == 0 && isDeterminerWord(tokens[0].lemma)) continue;
    if (tokens[r].pos == ".") continue;
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string canonicalIdentifier(const std::vector<std::string>& words, IdentifierKind kind) {
  if (words.empty()) throw Error(ErrorCode::EmptyIdentifier, "identifier needs at least one word");
  std::vector<std::string> parts;
  for (const auto& w : words) {
    std::string cur;
    for (unsigned char c : w) {
      if (std::isalnum(c)) {
        cur += static_cast<char>(c);
      } else if (!cur.empty()) {
        parts.push_back(cur);
        cur.clear();
      }
    }
    if (!cur.empty()) parts.push_back(cur);
  }
  if (parts.empty()) throw Error(ErrorCode::EmptyIdentifier, "identifier has no alphanumeric content");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& w = parts[i];
    if (i == 0 && kind == IdentifierKind::Property)
      out += allCaps(w) ? w : lower(w);
    else
      out += capitalized(w);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace cx {
namespace {
ClassExprPtr make(ClassExpr::Variant v) { return std::make_shared<const ClassExpr>(ClassExpr{std::move(v)}); }
}  // namespace

ClassExprPtr atomic(std::string name) { return make(Atomic{std::move(name)}); }
ClassExprPtr top() { return make(Top{}); }
ClassExprPtr intersection(std::vector<ClassExprPtr> operands) { return make(Intersection{std::move(operands)}); }
ClassExprPtr union_of(std::vector<ClassExprPtr> operands) { return make(Union{std::move(operands)}); }
ClassExprPtr complement(ClassExprPtr operand) { return make(Complement{std::move(operand)}); }
ClassExprPtr some(std::string p, ClassExprPtr f) { return make(Existential{std::move(p), std::move(f)}); }
ClassExprPtr only(std::string p, ClassExprPtr f) { return make(Universal{std::move(p), std::move(f)}); }
ClassExprPtr min(int n, std::string p, ClassExprPtr f) { return make(MinCard{n, std::move(p), std::move(f)}); }
ClassExprPtr max(int n, std::string p, ClassExprPtr f) { return make(MaxCard{n, std::move(p), std::move(f)}); }
ClassExprPtr exactly(int n, std::string p, ClassExprPtr f) { return make(ExactCard{n, std::move(p), std::move(f)}); }
ClassExprPtr has_value(std::string p, std::string i) { return make(HasValue{std::move(p), std::move(i)}); }
ClassExprPtr has_self(std::string p) { return make(HasSelf{std::move(p)}); }

ClassExprPtr conjoin(std::vector<ClassExprPtr> operands) {
  if (operands.size() == 1) return operands.front();
  if (operands.empty()) return top();
  return intersection(std::move(operands));
}

ClassExprPtr disjoin(std::vector<ClassExprPtr> operands) {
  if (operands.size() == 1) return operands.front();
  return union_of(std::move(operands));
}
}  // namespace cx

std::string canonicalKey(const ClassExpr& e) {
  auto sub = [](const ClassExprPtr& p) { return canonicalKey(*p); };
  auto list = [&](const char* tag, const std::vector<ClassExprPtr>& ops) {
    std::string s = tag;
    s += '(';
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (i) s += ' ';
      s += sub(ops[i]);
    }
    return s + ')';
  };
  return std::visit(
      overloaded{
          [](const Atomic& a) { return "A:" + a.name; },
          [](const Top&) { return std::string("T"); },
          [&](const Intersection& x) { return list("I", x.operands); },
          [&](const Union& x) { return list("U", x.operands); },
          [&](const Complement& x) { return "N(" + sub(x.operand) + ")"; },
          [&](const Existential& x) { return "E(" + x.property + " " + sub(x.filler) + ")"; },
          [&](const Universal& x) { return "V(" + x.property + " " + sub(x.filler) + ")"; },
          [&](const MinCard& x) {
            return "G" + std::to_string(x.n) + "(" + x.property + " " + sub(x.filler) + ")";
          },
          [&](const MaxCard& x) {
            return "L" + std::to_string(x.n) + "(" + x.property + " " + sub(x.filler) + ")";
          },
          [&](const ExactCard& x) {
            return "Q" + std::to_string(x.n) + "(" + x.property + " " + sub(x.filler) + ")";
          },
          [](const HasValue& x) { return "H(" + x.property + " " + x.individual + ")"; },
          [](const HasSelf& x) { return "S(" + x.property + ")"; },
      },
      e.node);
}

bool structurallyEqual(const ClassExpr& a, const ClassExpr& b) { return canonicalKey(a) == canonicalKey(b); }

bool structurallyEqual(const ClassExprPtr& a, const ClassExprPtr& b) {
  if (!a || !b) return a == b;
  return structurallyEqual(*a, *b);
}

namespace {

template <class Node>
ClassExprPtr normalizeNary(const std::vector<ClassExprPtr>& ops, bool is_intersection) {
  std::vector<std::pair<std::string, ClassExprPtr>> keyed;
  std::set<std::string> seen;
  auto push = [&](const ClassExprPtr& c) {
    auto key = canonicalKey(*c);
    if (seen.insert(key).second) keyed.emplace_back(std::move(key), c);
  };
  for (const auto& op : ops) {
    auto n = normalize(op);
    if (const auto* same = std::get_if<Node>(&n->node)) {
      for (const auto& inner : same->operands) push(inner);
    } else {
      push(n);
    }
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<ClassExprPtr> out;
  for (auto& [k, c] : keyed) out.push_back(c);
  if (out.size() == 1) return out.front();
  return is_intersection ? cx::intersection(std::move(out)) : cx::union_of(std::move(out));
}

}  // namespace

ClassExprPtr normalize(const ClassExprPtr& expr) {
  return std::visit(
      overloaded{
          [&](const Atomic&) { return expr; },
          [&](const Top&) { return expr; },
          [&](const Intersection& x) { return normalizeNary<Intersection>(x.operands, true); },
          [&](const Union& x) { return normalizeNary<Union>(x.operands, false); },
          [&](const Complement& x) { return cx::complement(normalize(x.operand)); },
          [&](const Existential& x) { return cx::some(x.property, normalize(x.filler)); },
          [&](const Universal& x) { return cx::only(x.property, normalize(x.filler)); },
          [&](const MinCard& x) { return cx::min(x.n, x.property, normalize(x.filler)); },
          [&](const MaxCard& x) { return cx::max(x.n, x.property, normalize(x.filler)); },
          [&](const ExactCard& x) { return cx::exactly(x.n, x.property, normalize(x.filler)); },
          [&](const HasValue&) { return expr; },
          [&](const HasSelf&) { return expr; },
      },
      expr->node);
}

Axiom Axiom::subClassOf(ClassExprPtr lhs, ClassExprPtr rhs, Provenance p) {
  return Axiom{AxiomForm::SubClassOf, std::move(lhs), std::move(rhs), std::move(p)};
}

Axiom Axiom::nonDefinitional(ClassExprPtr conjuncts, Provenance p) {
  return Axiom{AxiomForm::NonDefinitional, std::move(conjuncts), nullptr, std::move(p)};
}

Axiom normalize(const Axiom& a) {
  Axiom out = a;
  out.lhs = normalize(a.lhs);
  if (a.rhs) out.rhs = normalize(a.rhs);
  return out;
}

bool sameAxiom(const Axiom& a, const Axiom& b) {
  if (a.form != b.form) return false;
  if (!structurallyEqual(normalize(a.lhs), normalize(b.lhs))) return false;
  if (a.form == AxiomForm::NonDefinitional) return true;
  return structurallyEqual(normalize(a.rhs), normalize(b.rhs));
}

}  // namespace tedei
