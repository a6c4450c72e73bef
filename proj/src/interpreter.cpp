#include "tedei/interpreter.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

#include "tedei/resources.hpp"

namespace tedei {

std::string_view to_string(InterpretationForm f) {
  return f == InterpretationForm::Definitional ? "definitional" : "nondefinitional";
}

std::string_view to_string(QuantifierChoice q) {
  switch (q) {
    case QuantifierChoice::AsParsed: return "as-parsed";
    case QuantifierChoice::ForcedExistential: return "exists";
    case QuantifierChoice::ForcedUniversal: return "forall";
    case QuantifierChoice::ExistentialAndUniversal: return "exists+forall";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Trigger expressions

namespace {

bool validAtomValue(const std::string& prefix, const std::string& value);

class TriggerParser {
 public:
  explicit TriggerParser(std::string_view text) : s_(text) {}

  TriggerPtr parse() {
    auto e = parseOr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorCode::Config, "trigger expression '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  TriggerPtr combine(TriggerExpr::Op op, std::vector<TriggerPtr> xs) {
    if (xs.size() == 1) return xs[0];
    auto t = std::make_shared<TriggerExpr>();
    t->op = op;
    t->operands = std::move(xs);
    return t;
  }
  TriggerPtr parseOr() {
    std::vector<TriggerPtr> xs{parseAnd()};
    while (eat('|')) xs.push_back(parseAnd());
    return combine(TriggerExpr::Op::Or, std::move(xs));
  }
  TriggerPtr parseAnd() {
    std::vector<TriggerPtr> xs{parseNot()};
    while (eat('&')) xs.push_back(parseNot());
    return combine(TriggerExpr::Op::And, std::move(xs));
  }
  TriggerPtr parseNot() {
    if (eat('!')) {
      auto t = std::make_shared<TriggerExpr>();
      t->op = TriggerExpr::Op::Not;
      t->operands.push_back(parseNot());
      return t;
    }
    if (eat('(')) {
      auto e = parseOr();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == ':' ||
                              s_[i_] == '-' || s_[i_] == '_'))
      ++i_;
    if (b == i_) fail("expected an atom");
    auto atom = std::string(s_.substr(b, i_ - b));
    auto colon = atom.find(':');
    static const std::vector<std::string> kPrefixes{"has", "has-filler", "subject"};
    if (colon == std::string::npos ||
        std::find(kPrefixes.begin(), kPrefixes.end(), atom.substr(0, colon)) == kPrefixes.end())
      fail("unknown atom '" + atom + "'");
    if (!validAtomValue(atom.substr(0, colon), atom.substr(colon + 1))) fail("unknown value in '" + atom + "'");
    auto t = std::make_shared<TriggerExpr>();
    t->atom = atom;
    return t;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

std::optional<NodeKind> nodeKindByName(std::string_view name) {
  for (int k = 0; k <= static_cast<int>(NodeKind::Terminal); ++k)
    if (to_string(static_cast<NodeKind>(k)) == name) return static_cast<NodeKind>(k);
  return std::nullopt;
}

bool validAtomValue(const std::string& prefix, const std::string& value) {
  if (prefix == "subject") return value == "indefinite" || value == "universal" || value == "bare-plural" || value == "bare";
  return nodeKindByName(value).has_value();
}

bool anyNode(const ParseNode& n, const std::function<bool(const ParseNode&)>& pred) {
  if (pred(n)) return true;
  return std::any_of(n.children.begin(), n.children.end(), [&](const ParseTree& c) { return anyNode(*c, pred); });
}

std::size_t subjectSpanOf(const ParseNode& tree) {
  const ParseNode* n = &tree;
  while (!n->isTerminal()) n = n->children.front().get();
  return n->first;
}

Expansion expansionFromString(std::string_view s) {
  if (s == "as-parsed") return Expansion::AsParsed;
  if (s == "exists") return Expansion::Exists;
  if (s == "forall") return Expansion::Forall;
  if (s == "exists+forall") return Expansion::ExistsForall;
  if (s == "definitional") return Expansion::Definitional;
  if (s == "nondefinitional") return Expansion::NonDefinitional;
  throw Error(ErrorCode::Config, "unknown expansion '" + std::string(s) + "'");
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

AmbiguityPattern makePattern(std::string name, std::string trigger, std::string_view expansions) {
  AmbiguityPattern p;
  p.name = std::move(name);
  p.triggerText = std::move(trigger);
  p.trigger = parseTrigger(p.triggerText);
  std::stringstream ss{std::string(expansions)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto t = trim(item);
    if (!t.empty()) p.expansions.push_back(expansionFromString(t));
  }
  if (p.expansions.empty()) throw Error(ErrorCode::Config, "pattern " + p.name + " has no expansions");
  return p;
}

}  // namespace

TriggerPtr parseTrigger(std::string_view text) { return TriggerParser(text).parse(); }

bool triggers(const TriggerExpr& t, const ParseNode& tree, const Lexicalization& lex) {
  switch (t.op) {
    case TriggerExpr::Op::Not: return !triggers(*t.operands[0], tree, lex);
    case TriggerExpr::Op::And:
      return std::all_of(t.operands.begin(), t.operands.end(),
                         [&](const TriggerPtr& o) { return triggers(*o, tree, lex); });
    case TriggerExpr::Op::Or:
      return std::any_of(t.operands.begin(), t.operands.end(),
                         [&](const TriggerPtr& o) { return triggers(*o, tree, lex); });
    case TriggerExpr::Op::Atom: break;
  }
  auto colon = t.atom.find(':');
  auto prefix = t.atom.substr(0, colon);
  auto arg = t.atom.substr(colon + 1);
  if (prefix == "subject") return subjectKind(lex, subjectSpanOf(tree)) == arg;
  auto kind = nodeKindByName(arg);
  if (!kind) return false;
  if (prefix == "has") return tree.contains(*kind);
  return anyNode(tree, [&](const ParseNode& n) {
    return n.kind == *kind && std::any_of(n.children.begin(), n.children.end(), [](const ParseTree& c) {
             return c->kind == NodeKind::ClassComb;
           });
  });
}

PatternRegistry PatternRegistry::parse(std::string_view text) {
  PatternRegistry r;
  r.add(makePattern("P1", "has-filler:existRes", "exists,forall,exists+forall"));
  r.add(makePattern("P2", "subject:indefinite | subject:bare-plural", "definitional,nondefinitional"));
  std::stringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ls(t);
    std::string col;
    while (std::getline(ls, col, '\t')) cols.push_back(trim(col));
    if (cols.size() != 3)
      throw Error(ErrorCode::Config, "ambiguity pattern line " + std::to_string(lineno) + ": expected 3 columns");
    auto existing = std::find_if(r.patterns_.begin(), r.patterns_.end(),
                                 [&](const AmbiguityPattern& p) { return p.name == cols[0]; });
    if (existing != r.patterns_.end()) continue;
    r.add(makePattern(cols[0], cols[1], cols[2]));
  }
  return r;
}

PatternRegistry PatternRegistry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read ambiguity patterns: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const PatternRegistry& PatternRegistry::standard() {
  static const PatternRegistry r = parse(resources::ambiguityPatterns());
  return r;
}

void PatternRegistry::add(AmbiguityPattern p) { patterns_.push_back(std::move(p)); }

// ---------------------------------------------------------------------------
// Naming

std::string conceptName(const Lexicalization& lex, std::size_t span) {
  return makeIdentifier(lex.tokens, lex.spans[span].range, IdentifierKind::Concept).canonical;
}

std::string propertyName(const Lexicalization& lex, std::size_t span) {
  return makeIdentifier(lex.tokens, lex.spans[span].range, IdentifierKind::Property).canonical;
}

std::string individualName(const Lexicalization& lex, std::size_t span) {
  return makeIdentifier(lex.tokens, lex.spans[span].range, IdentifierKind::Individual).canonical;
}

std::string subjectKind(const Lexicalization& lex, std::size_t span) {
  if (auto det = lex.subjectDeterminer()) {
    if (*det == "a" || *det == "an") return "indefinite";
    return "universal";
  }
  const auto& head = lex.tokens[lex.spans[span].range.end - 1];
  if (head.pos == "NNS" || head.pos == "NNPS") return "bare-plural";
  return "bare";
}

std::string subjectName(const Lexicalization& lex, std::size_t span) {
  const auto& s = lex.spans[span];
  if (s.kind == SpanKind::Individual) return individualName(lex, span);
  auto id = makeIdentifier(lex.tokens, s.range, IdentifierKind::Concept);
  if (subjectKind(lex, span) != "bare-plural") return id.canonical;
  auto words = id.words;
  words.back() = singularize(words.back());
  return canonicalIdentifier(words, IdentifierKind::Concept);
}

// ---------------------------------------------------------------------------
// Flattening

namespace {

JoinKind joinFor(const Lexicalization& lex, std::size_t span) {
  const auto& s = lex.spans[span];
  if (s.indicator == IndicatorKind::Intersection) return JoinKind::That;
  if (s.indicator == IndicatorKind::Union) return JoinKind::Or;
  auto w = lex.tokens[s.range.begin].lemma;
  if (w == "or") return JoinKind::Or;
  if (w == "," || lex.tokens[s.range.begin].surface == ",") return JoinKind::Comma;
  return JoinKind::And;
}

class Flattener {
 public:
  explicit Flattener(const Lexicalization& lex) : lex_(lex) {}

  Clause run(const ParseNode& root) {
    clause_.subject = subjectSpanOf(root);
    walk(*root.children.at(1));
    return std::move(clause_);
  }

 private:
  void join(std::size_t span) { pending_ = Join{joinFor(lex_, span), span}; }

  void emit(ClausePart p) {
    if (!clause_.parts.empty()) clause_.joins.push_back(pending_);
    pending_ = Join{};
    clause_.parts.push_back(std::move(p));
  }

  // Collects CLASS spans and their connectives from a classComb chain.
  void fillers(const ParseNode& cc, std::vector<std::size_t>& out, std::vector<Join>& joins) {
    out.push_back(cc.children[0]->first);
    if (cc.children.size() == 3) {
      joins.push_back(Join{joinFor(lex_, cc.children[1]->first), cc.children[1]->first});
      fillers(*cc.children[2], out, joins);
    }
  }

  // Emits one part per filler, copying everything else.
  void distribute(ClausePart proto, const ParseNode* cc) {
    proto.group = group_++;
    if (!cc) {
      emit(proto);
      return;
    }
    std::vector<std::size_t> fs;
    std::vector<Join> js;
    fillers(*cc, fs, js);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i > 0) pending_ = js[i - 1];
      ClausePart p = proto;
      p.filler = fs[i];
      emit(p);
    }
  }

  std::optional<int> cardOf(std::size_t span) const { return lex_.spans[span].value; }

  void walk(const ParseNode& n) {
    const auto& ch = n.children;
    auto t = [&](std::size_t i) { return ch[i]->first; };
    auto cc = [&](std::size_t i) -> const ParseNode* {
      return i < ch.size() && ch[i]->kind == NodeKind::ClassComb ? ch[i].get() : nullptr;
    };
    switch (n.kind) {
      case NodeKind::Rexpr:
      case NodeKind::ClsExp: walk(*ch[0]); return;
      case NodeKind::Union:
      case NodeKind::Intersection:
      case NodeKind::ClsExpComb:
        walk(*ch[0]);
        if (ch.size() == 3) {
          join(t(1));
          walk(*ch[2]);
        } else if (ch.size() == 2) {
          walk(*ch[1]);
        }
        return;
      case NodeKind::ClassComb: {
        ClausePart p;
        p.kind = PartKind::Class;
        std::vector<std::size_t> fs;
        std::vector<Join> js;
        fillers(n, fs, js);
        std::size_t g = group_++;
        for (std::size_t i = 0; i < fs.size(); ++i) {
          if (i > 0) pending_ = js[i - 1];
          ClausePart q = p;
          q.filler = fs[i];
          q.group = g;
          emit(q);
        }
        return;
      }
      case NodeKind::ExistRes: {
        ClausePart p;
        p.kind = PartKind::Exists;
        p.property = t(0);
        if (n.alternative == 0) p.indicator = t(1);
        p.p1Eligible = n.alternative != 2;
        distribute(p, cc(ch.size() - 1));
        return;
      }
      case NodeKind::UniRes: {
        ClausePart p;
        p.kind = PartKind::Forall;
        p.indicatorFirst = n.alternative == 1;
        p.property = t(p.indicatorFirst ? 1 : 0);
        p.indicator = t(p.indicatorFirst ? 0 : 1);
        distribute(p, cc(2));
        return;
      }
      case NodeKind::Complement: {
        ClausePart p;
        p.kind = PartKind::NegExists;
        p.indicatorFirst = n.alternative == 0 || n.alternative == 2;
        p.property = t(p.indicatorFirst ? 1 : 0);
        p.indicator = t(p.indicatorFirst ? 0 : 1);
        distribute(p, cc(2));
        return;
      }
      case NodeKind::ExactCard:
      case NodeKind::MinCard:
      case NodeKind::MaxCard:
      case NodeKind::QualExactCard:
      case NodeKind::QualMinCard:
      case NodeKind::QualMaxCard: {
        ClausePart p;
        if (n.kind == NodeKind::ExactCard || n.kind == NodeKind::QualExactCard) p.kind = PartKind::Exact;
        else if (n.kind == NodeKind::MinCard || n.kind == NodeKind::QualMinCard) p.kind = PartKind::Min;
        else p.kind = PartKind::Max;
        p.property = t(0);
        for (std::size_t i = 1; i < ch.size(); ++i) {
          if (!ch[i]->isTerminal()) continue;
          const auto& s = lex_.spans[t(i)];
          if (s.kind == SpanKind::Cardinality) p.cardinal = t(i);
          else if (s.kind == SpanKind::Indicator) p.indicator = t(i);
        }
        p.n = lex_.spans[*p.cardinal].value.value_or(0);
        p.approximate = p.indicator && lex_.spans[*p.indicator].indicator == IndicatorKind::AmbiExactCard;
        // Strict comparisons: "more than n" is ≥ n+1, "less than n" is ≤ n-1.
        if (p.indicator && p.kind != PartKind::Exact) {
          auto words = lex_.words(lex_.spans[*p.indicator]);
          std::string w;
          for (auto& x : words) w += (w.empty() ? "" : " ") + lowerWord(x);
          if (w == "more than") p.n += 1;
          else if (w == "less than" && p.n > 0) p.n -= 1;
        }
        distribute(p, cc(ch.size() - 1));
        return;
      }
      case NodeKind::IndValueRes: {
        ClausePart p;
        p.kind = PartKind::Value;
        p.property = t(0);
        p.individual = t(1);
        distribute(p, nullptr);
        return;
      }
      case NodeKind::SelfValueRes: {
        ClausePart p;
        p.kind = PartKind::Self;
        p.property = t(0);
        p.indicator = t(1);
        distribute(p, nullptr);
        return;
      }
      default:
        for (const auto& c : ch) walk(*c);
        return;
    }
  }

  static std::string lowerWord(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  }

  const Lexicalization& lex_;
  Clause clause_;
  Join pending_;
  std::size_t group_ = 0;
};

bool isRestriction(PartKind k) { return k != PartKind::Class; }

// A filler-less verb joined to a following restriction shares that restriction's
// filler and quantifier: "seizes and detains a victim".
void shareVerbPhraseFillers(Clause& c) {
  for (std::size_t i = c.parts.size(); i-- > 1;) {
    auto& p = c.parts[i - 1];
    if (p.kind != PartKind::Exists || p.filler || p.indicator) continue;
    const auto& j = c.joins[i - 1];
    if (j.kind == JoinKind::Implicit || j.kind == JoinKind::That) continue;
    std::size_t g = c.parts[i].group;
    if (!isRestriction(c.parts[i].kind) || !c.parts[i].filler) continue;
    std::size_t e = i;
    while (e < c.parts.size() && c.parts[e].group == g) ++e;
    std::vector<ClausePart> copies;
    std::vector<Join> inner;
    for (std::size_t k = i; k < e; ++k) {
      ClausePart q = c.parts[k];
      q.property = p.property;
      q.group = p.group;
      q.borrowed = true;
      copies.push_back(q);
      if (k + 1 < e) inner.push_back(c.joins[k]);
    }
    c.parts.erase(c.parts.begin() + static_cast<std::ptrdiff_t>(i - 1));
    c.parts.insert(c.parts.begin() + static_cast<std::ptrdiff_t>(i - 1), copies.begin(), copies.end());
    c.joins.insert(c.joins.begin() + static_cast<std::ptrdiff_t>(i - 1), inner.begin(), inner.end());
  }
}

}  // namespace

Clause flatten(const ParseNode& tree, const Lexicalization& lex) {
  auto c = Flattener(lex).run(tree);
  shareVerbPhraseFillers(c);
  return c;
}

std::vector<SplitDelta> applyModifierSplit(Clause& c, const Lexicalization& lex, const PatternSet& patterns) {
  std::vector<SplitDelta> out;
  for (std::size_t i = 0; i + 1 < c.parts.size(); ++i) {
    auto& p = c.parts[i];
    auto& q = c.parts[i + 1];
    if (!isRestriction(p.kind) || !p.filler || q.kind != PartKind::Class) continue;
    if (c.joins[i].kind != JoinKind::Implicit) continue;
    const auto& fr = lex.spans[*p.filler].range;
    const auto& qr = lex.spans[*q.filler].range;
    if (fr.end != qr.begin) continue;
    if (!patterns.anyMatch(IdentifierKind::Concept, lex.tokens, TokenRange{fr.begin, qr.end})) continue;
    std::size_t head = *q.filler;
    ClausePart copy = p;
    copy.filler = head;
    q = copy;
    out.push_back({i, head});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expressions

ClassExprPtr partExpr(const ClausePart& p, const Lexicalization& lex) {
  auto filler = p.filler ? cx::atomic(conceptName(lex, *p.filler)) : cx::top();
  auto prop = [&] { return propertyName(lex, *p.property); };
  switch (p.kind) {
    case PartKind::Class: return filler;
    case PartKind::Exists: return cx::some(prop(), filler);
    case PartKind::Forall: return cx::only(prop(), filler);
    case PartKind::Exact: return cx::exactly(p.n, prop(), filler);
    case PartKind::Min: return cx::min(p.n, prop(), filler);
    case PartKind::Max: return cx::max(p.n, prop(), filler);
    case PartKind::Value: return cx::has_value(prop(), individualName(lex, *p.individual));
    case PartKind::Self: return cx::has_self(prop());
    case PartKind::NegExists: return cx::complement(cx::some(prop(), filler));
  }
  throw Error(ErrorCode::InternalInconsistency, "unknown clause part kind");
}

ClassExprPtr clauseExpr(const Clause& c, const Lexicalization& lex) {
  std::vector<ClassExprPtr> disjuncts;
  std::vector<ClassExprPtr> group;
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (i > 0 && c.joins[i - 1].kind == JoinKind::Or) {
      disjuncts.push_back(cx::conjoin(std::move(group)));
      group.clear();
    }
    group.push_back(partExpr(c.parts[i], lex));
  }
  disjuncts.push_back(cx::conjoin(std::move(group)));
  return cx::disjoin(std::move(disjuncts));
}

ClassExprPtr subjectExpr(const Clause& c, const Lexicalization& lex) {
  return cx::atomic(subjectName(lex, c.subject));
}

Clause applyQuantifier(const Clause& c, QuantifierChoice q) {
  if (q == QuantifierChoice::AsParsed || q == QuantifierChoice::ForcedExistential) return c;
  if (q == QuantifierChoice::ForcedUniversal) {
    Clause out = c;
    for (auto& p : out.parts)
      if (p.p1Eligible) {
        p.kind = PartKind::Forall;
        p.forced = true;
      }
    return out;
  }
  Clause out;
  out.subject = c.subject;
  auto push = [&](const ClausePart& p, const Join& j) {
    if (!out.parts.empty()) out.joins.push_back(j);
    out.parts.push_back(p);
  };
  std::size_t i = 0;
  while (i < c.parts.size()) {
    Join before = i > 0 ? c.joins[i - 1] : Join{};
    if (!c.parts[i].p1Eligible) {
      push(c.parts[i], before);
      ++i;
      continue;
    }
    std::size_t e = i + 1;
    while (e < c.parts.size() && c.parts[e].p1Eligible && c.parts[e].group == c.parts[i].group) ++e;
    for (std::size_t k = i; k < e; ++k) push(c.parts[k], k == i ? before : c.joins[k - 1]);
    for (std::size_t k = i; k < e; ++k) {
      ClausePart u = c.parts[k];
      u.kind = PartKind::Forall;
      u.forced = true;
      push(u, k == i ? Join{JoinKind::And, std::nullopt} : c.joins[k - 1]);
    }
    i = e;
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Interpretation> interpret(const ParseTree& tree, std::shared_ptr<const Lexicalization> lex,
                                      const InterpretOptions& opts) {
  const auto& registry = opts.registry ? *opts.registry : PatternRegistry::standard();
  const auto& patterns = opts.patterns ? *opts.patterns : PatternSet::standard();

  Clause clause = flatten(*tree, *lex);
  auto splits = applyModifierSplit(clause, *lex, patterns);

  std::vector<QuantifierChoice> quants;
  std::vector<InterpretationForm> forms;
  std::vector<std::string> fired;
  auto addQ = [&](QuantifierChoice q) {
    if (std::find(quants.begin(), quants.end(), q) == quants.end()) quants.push_back(q);
  };
  auto addF = [&](InterpretationForm f) {
    if (std::find(forms.begin(), forms.end(), f) == forms.end()) forms.push_back(f);
  };
  for (const auto& p : registry.patterns()) {
    if (!triggers(*p.trigger, *tree, *lex)) continue;
    fired.push_back(p.name);
    for (auto e : p.expansions) {
      switch (e) {
        case Expansion::AsParsed: addQ(QuantifierChoice::AsParsed); break;
        case Expansion::Exists: addQ(QuantifierChoice::ForcedExistential); break;
        case Expansion::Forall: addQ(QuantifierChoice::ForcedUniversal); break;
        case Expansion::ExistsForall: addQ(QuantifierChoice::ExistentialAndUniversal); break;
        case Expansion::Definitional: addF(InterpretationForm::Definitional); break;
        case Expansion::NonDefinitional: addF(InterpretationForm::NonDefinitional); break;
      }
    }
  }
  if (quants.empty()) quants.push_back(QuantifierChoice::AsParsed);
  if (forms.empty()) forms.push_back(InterpretationForm::Definitional);

  std::vector<Interpretation> out;
  for (auto f : forms) {
    for (auto q : quants) {
      Interpretation in;
      in.form = f;
      in.quantifier = q;
      in.clause = applyQuantifier(clause, q);
      in.lhs = subjectExpr(in.clause, *lex);
      in.rhs = clauseExpr(in.clause, *lex);
      in.splits = splits;
      in.lexicalization = lex;
      in.interpretationIndex = out.size();
      in.approximateCardinality = std::any_of(in.clause.parts.begin(), in.clause.parts.end(),
                                              [](const ClausePart& p) { return p.approximate; });
      in.patterns = fired;
      out.push_back(std::move(in));
    }
  }
  return out;
}

}  // namespace tedei
