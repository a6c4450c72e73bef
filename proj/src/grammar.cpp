#include "tedei/grammar.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace tedei {

namespace {

constexpr std::string_view kNodeNames[] = {
    "start",    "lexpr",         "rexpr",       "union",       "intersection", "clsExpComb",
    "clsExp",   "complement",    "uniRes",      "existRes",    "exactCard",    "minCard",
    "maxCard",  "qualExactCard", "qualMinCard", "qualMaxCard", "indValueRes",  "selfValueRes",
    "classComb", "terminal"};

struct Result {
  std::size_t end;
  ParseTree tree;
};
using Results = std::vector<Result>;

// An element of a production: reads from a terminal index, yields continuations.
using Element = std::function<Results(std::size_t)>;

class Parser {
 public:
  Parser(const Lexicalization& lex, std::size_t cap) : lex_(lex), n_(lex.spans.size()), cap_(cap) {}

  RecognizeResult run() {
    RecognizeResult out;
    for (auto& r : start(0)) {
      if (r.end != n_) continue;
      if (out.trees.size() >= cap_) {
        truncated_ = true;
        break;
      }
      out.trees.push_back(r.tree);
    }
    out.truncated = truncated_;
    out.furthest = furthest_;
    return out;
  }

 private:
  // ---- terminals

  Element term(SpanKind k) {
    return [this, k](std::size_t pos) -> Results {
      furthest_ = std::max(furthest_, pos);
      if (pos < n_ && lex_.spans[pos].kind == k) return {{pos + 1, leaf(pos)}};
      return {};
    };
  }

  Element ind(IndicatorKind k) {
    return [this, k](std::size_t pos) -> Results {
      furthest_ = std::max(furthest_, pos);
      if (pos < n_ && lex_.spans[pos].kind == SpanKind::Indicator && lex_.spans[pos].indicator == k)
        return {{pos + 1, leaf(pos)}};
      return {};
    };
  }

  // Filler-less forms only close a clause: the next terminal must be absent or an indicator.
  Element clauseEnd() {
    return [this](std::size_t pos) -> Results {
      if (pos == n_ || lex_.spans[pos].kind == SpanKind::Indicator) return {{pos, nullptr}};
      return {};
    };
  }

  Element nt(Results (Parser::*fn)(std::size_t)) {
    return [this, fn](std::size_t pos) { return (this->*fn)(pos); };
  }

  ParseTree leaf(std::size_t i) const {
    auto n = std::make_shared<ParseNode>();
    n->kind = NodeKind::Terminal;
    n->first = i;
    n->last = i + 1;
    return n;
  }

  // ---- combinators

  Results sequence(NodeKind kind, int alt, const std::vector<Element>& elems, std::size_t pos) {
    struct Partial {
      std::size_t pos;
      std::vector<ParseTree> parts;
    };
    std::vector<Partial> frontier{{pos, {}}};
    for (const auto& e : elems) {
      std::vector<Partial> next;
      for (const auto& p : frontier) {
        for (auto& r : e(p.pos)) {
          Partial q{r.end, p.parts};
          if (r.tree) q.parts.push_back(r.tree);
          next.push_back(std::move(q));
          if (next.size() > cap_) {
            truncated_ = true;
            break;
          }
        }
      }
      frontier = std::move(next);
      if (frontier.empty()) return {};
    }
    Results out;
    for (auto& p : frontier) {
      auto node = std::make_shared<ParseNode>();
      node->kind = kind;
      node->alternative = alt;
      node->first = pos;
      node->last = p.pos;
      node->children = std::move(p.parts);
      out.push_back({p.pos, node});
    }
    return out;
  }

  Results alternatives(NodeKind kind, std::size_t pos, const std::vector<std::vector<Element>>& alts) {
    auto key = std::make_pair(static_cast<int>(kind), pos);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Results out;
    for (std::size_t a = 0; a < alts.size(); ++a) {
      for (auto& r : sequence(kind, static_cast<int>(a), alts[a], pos)) {
        if (out.size() >= cap_) {
          truncated_ = true;
          break;
        }
        out.push_back(std::move(r));
      }
    }
    // Longest first; among equal spans, the derivation whose earlier constituents
    // are longer comes first.
    std::stable_sort(out.begin(), out.end(), [](const Result& l, const Result& r) {
      if (l.end != r.end) return l.end > r.end;
      const auto& a = l.tree->children;
      const auto& b = r.tree->children;
      for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i]->last != b[i]->last) return a[i]->last > b[i]->last;
      return false;
    });
    memo_[key] = out;
    return out;
  }

  // Wraps a single child under a pass-through node of the given kind.
  Results wrap(NodeKind kind, std::size_t pos, Results (Parser::*fn)(std::size_t)) {
    return alternatives(kind, pos, {{nt(fn)}});
  }

  // ---- productions

  Results start(std::size_t p) { return alternatives(NodeKind::Start, p, {{nt(&Parser::lexpr), nt(&Parser::rexpr)}}); }

  Results lexpr(std::size_t p) {
    return alternatives(NodeKind::Lexpr, p, {{term(SpanKind::Class)}, {term(SpanKind::Individual)}});
  }

  Results rexpr(std::size_t p) { return wrap(NodeKind::Rexpr, p, &Parser::union_); }

  Results union_(std::size_t p) {
    using P = Parser;
    return alternatives(NodeKind::Union, p,
                        {{nt(&P::intersection), ind(IndicatorKind::Union), nt(&P::union_)},
                         {nt(&P::complement), ind(IndicatorKind::Union), nt(&P::union_)},
                         {nt(&P::intersection)},
                         {nt(&P::complement)}});
  }

  Results intersection(std::size_t p) {
    using P = Parser;
    return alternatives(NodeKind::Intersection, p,
                        {{nt(&P::clsExpComb), ind(IndicatorKind::Intersection), nt(&P::intersection)},
                         {nt(&P::clsExpComb)}});
  }

  Results clsExpComb(std::size_t p) {
    using P = Parser;
    return alternatives(NodeKind::ClsExpComb, p,
                        {{nt(&P::clsExp), ind(IndicatorKind::ClsExp), nt(&P::clsExpComb)},
                         {nt(&P::clsExp), nt(&P::clsExpComb)},
                         {nt(&P::clsExp)}});
  }

  Results clsExp(std::size_t p) {
    using P = Parser;
    return alternatives(NodeKind::ClsExp, p,
                        {{nt(&P::complement)},
                         {nt(&P::uniRes)},
                         {nt(&P::existRes)},
                         {nt(&P::exactCard)},
                         {nt(&P::minCard)},
                         {nt(&P::maxCard)},
                         {nt(&P::qualExactCard)},
                         {nt(&P::qualMinCard)},
                         {nt(&P::qualMaxCard)},
                         {nt(&P::indValueRes)},
                         {nt(&P::selfValueRes)},
                         {nt(&P::classComb)}});
  }

  Results complement(std::size_t p) {
    auto P_ = term(SpanKind::Property);
    return alternatives(NodeKind::Complement, p,
                        {{ind(IndicatorKind::PreComplement), P_, nt(&Parser::classComb)},
                         {P_, ind(IndicatorKind::PostComplement), nt(&Parser::classComb)},
                         {ind(IndicatorKind::PreComplement), P_, clauseEnd()},
                         {P_, ind(IndicatorKind::PostComplement), clauseEnd()}});
  }

  Results uniRes(std::size_t p) {
    auto P_ = term(SpanKind::Property);
    return alternatives(NodeKind::UniRes, p,
                        {{P_, ind(IndicatorKind::Universal), nt(&Parser::classComb)},
                         {ind(IndicatorKind::Universal), P_, nt(&Parser::classComb)}});
  }

  Results existRes(std::size_t p) {
    auto P_ = term(SpanKind::Property);
    return alternatives(NodeKind::ExistRes, p,
                        {{P_, ind(IndicatorKind::Existential), nt(&Parser::classComb)},
                         {P_, nt(&Parser::classComb)},
                         {P_, clauseEnd()}});
  }

  Results exactCard(std::size_t p) {
    auto P_ = term(SpanKind::Property);
    auto C_ = term(SpanKind::Cardinality);
    return alternatives(NodeKind::ExactCard, p,
                        {{P_, ind(IndicatorKind::ExactCardinality), C_, clauseEnd()},
                         {P_, ind(IndicatorKind::AmbiExactCard), C_, clauseEnd()},
                         {P_, C_, clauseEnd()}});
  }

  Results minCard(std::size_t p) {
    auto P_ = term(SpanKind::Property);
    auto C_ = term(SpanKind::Cardinality);
    return alternatives(NodeKind::MinCard, p,
                        {{P_, ind(IndicatorKind::PreMinCard), C_, clauseEnd()},
                         {P_, C_, ind(IndicatorKind::PostMinCard), clauseEnd()}});
  }

  Results maxCard(std::size_t p) {
    auto P_ = term(SpanKind::Property);
    auto C_ = term(SpanKind::Cardinality);
    return alternatives(NodeKind::MaxCard, p,
                        {{P_, ind(IndicatorKind::PreMaxCard), C_, clauseEnd()},
                         {P_, C_, ind(IndicatorKind::PostMaxCard), clauseEnd()}});
  }

  Results qualExactCard(std::size_t p) {
    auto P_ = term(SpanKind::Property);
    auto C_ = term(SpanKind::Cardinality);
    auto F_ = nt(&Parser::classComb);
    return alternatives(NodeKind::QualExactCard, p,
                        {{P_, ind(IndicatorKind::ExactCardinality), C_, F_},
                         {P_, ind(IndicatorKind::AmbiExactCard), C_, F_},
                         {P_, C_, F_}});
  }

  Results qualMinCard(std::size_t p) {
    auto P_ = term(SpanKind::Property);
    auto C_ = term(SpanKind::Cardinality);
    auto F_ = nt(&Parser::classComb);
    return alternatives(NodeKind::QualMinCard, p,
                        {{P_, ind(IndicatorKind::PreMinCard), C_, F_},
                         {P_, C_, ind(IndicatorKind::PostMinCard), F_}});
  }

  Results qualMaxCard(std::size_t p) {
    auto P_ = term(SpanKind::Property);
    auto C_ = term(SpanKind::Cardinality);
    auto F_ = nt(&Parser::classComb);
    return alternatives(NodeKind::QualMaxCard, p,
                        {{P_, ind(IndicatorKind::PreMaxCard), C_, F_},
                         {P_, C_, ind(IndicatorKind::PostMaxCard), F_}});
  }

  Results indValueRes(std::size_t p) {
    return alternatives(NodeKind::IndValueRes, p, {{term(SpanKind::Property), term(SpanKind::Individual)}});
  }

  Results selfValueRes(std::size_t p) {
    return alternatives(NodeKind::SelfValueRes, p, {{term(SpanKind::Property), ind(IndicatorKind::Self)}});
  }

  Results classComb(std::size_t p) {
    return alternatives(NodeKind::ClassComb, p,
                        {{term(SpanKind::Class), ind(IndicatorKind::ClsExp), nt(&Parser::classComb)},
                         {term(SpanKind::Class)}});
  }

  const Lexicalization& lex_;
  std::size_t n_;
  std::size_t cap_;
  bool truncated_ = false;
  std::size_t furthest_ = 0;
  std::map<std::pair<int, std::size_t>, Results> memo_;
};

}  // namespace

std::string_view to_string(NodeKind k) { return kNodeNames[static_cast<int>(k)]; }

std::vector<std::size_t> ParseNode::leaves() const {
  std::vector<std::size_t> out;
  std::function<void(const ParseNode&)> walk = [&](const ParseNode& n) {
    if (n.isTerminal()) {
      out.push_back(n.first);
      return;
    }
    for (const auto& c : n.children) walk(*c);
  };
  walk(*this);
  return out;
}

bool ParseNode::contains(NodeKind k) const {
  if (kind == k) return true;
  return std::any_of(children.begin(), children.end(), [k](const ParseTree& c) { return c->contains(k); });
}

TokenRange tokenRange(const ParseNode& node, const Lexicalization& lex) {
  if (node.first >= node.last) return {};
  return {lex.spans[node.first].range.begin, lex.spans[node.last - 1].range.end};
}

std::string describe(const ParseNode& node, const Lexicalization& lex) {
  if (node.isTerminal()) {
    const auto& s = lex.spans[node.first];
    std::string name = s.kind == SpanKind::Indicator ? std::string(to_string(*s.indicator))
                                                     : std::string(to_string(s.kind));
    return name + "[" + lex.text(s) + "]";
  }
  std::string out = "(" + std::string(to_string(node.kind));
  for (const auto& c : node.children) out += " " + describe(*c, lex);
  return out + ")";
}

RecognizeResult recognizeAll(const Lexicalization& lex, std::size_t tree_cap) {
  if (lex.spans.empty()) return {};
  return Parser(lex, tree_cap).run();
}

std::vector<ParseTree> recognize(const Lexicalization& lex) { return recognizeAll(lex).trees; }

std::string diagnose(const std::vector<Token>& tokens, std::optional<std::size_t> fail_token,
                     bool no_segmentation) {
  std::string at;
  if (fail_token && *fail_token < tokens.size())
    at = "'" + tokens[*fail_token].surface + "' (token " + std::to_string(*fail_token) + ")";
  else
    at = "the end of the sentence";
  if (no_segmentation)
    return "no segmentation into classes, properties and indicator words covers " + at +
           "; reformulate around that word";
  return "no lexicalization conforms to the grammar; recognition fails at " + at +
         "; reformulate as '<Every|A> <class> <class expression>'";
}

TedeiVerdict isTedeiSentence(std::string_view sentence, const Lexicalizer& lexicalizer, std::size_t cap) {
  auto tokens = tag(sentence);
  auto en = lexicalizer.enumerate(tokens, cap);
  TedeiVerdict v;
  v.lexicalizations = en.lexicalizations.size();
  std::size_t furthest_token = 0;
  for (const auto& lex : en.lexicalizations) {
    auto r = recognizeAll(lex, 1);
    if (!r.trees.empty()) {
      ++v.tedeiLexicalizations;
      continue;
    }
    std::size_t tok = r.furthest < lex.spans.size() ? lex.spans[r.furthest].range.begin : tokens.size();
    furthest_token = std::max(furthest_token, tok);
  }
  v.tedei = v.tedeiLexicalizations > 0;
  if (!v.tedei) {
    bool none = en.lexicalizations.empty();
    std::size_t tok = none ? en.furthest : furthest_token;
    if (tok < tokens.size()) v.failToken = tok;
    v.diagnostics = diagnose(tokens, v.failToken, none);
  }
  return v;
}

std::string grammarBnf() {
  return R"(<start>        ::= <lexpr> <rexpr>
<lexpr>        ::= CLASS | INDIVIDUAL
<rexpr>        ::= <union>
<union>        ::= (<intersection> | <complement>) (<unionInd> <union>)*
<intersection> ::= <clsExpComb> (<intersectionInd> <intersection>)*
<clsExpComb>   ::= <clsExp> (<clsExpInd>? <clsExpComb>)*
<clsExp>       ::= <complement> | <uniRes> | <existRes> | <exactCard> | <minCard> | <maxCard>
                 | <qualExactCard> | <qualMinCard> | <qualMaxCard> | <indValueRes>
                 | <selfValueRes> | <classComb>
<complement>   ::= <preComplementInd> PROPERTY <classComb>
                 | PROPERTY <postComplementInd> <classComb>
                 | <preComplementInd> PROPERTY                    (clause-final)
                 | PROPERTY <postComplementInd>                   (clause-final)
<uniRes>       ::= PROPERTY <universalInd> <classComb> | <universalInd> PROPERTY <classComb>
<existRes>     ::= PROPERTY <existentialInd> <classComb> | PROPERTY <classComb>
                 | PROPERTY                                       (clause-final)
<exactCard>    ::= PROPERTY <exactCardinalityInd> CARDINALITY | PROPERTY <ambiExactCardInd> CARDINALITY
                 | PROPERTY CARDINALITY                           (all clause-final)
<minCard>      ::= PROPERTY <preMinCardInd> CARDINALITY | PROPERTY CARDINALITY <postMinCardInd>
<maxCard>      ::= PROPERTY <preMaxCardInd> CARDINALITY | PROPERTY CARDINALITY <postMaxCardInd>
<qualExactCard>::= PROPERTY <exactCardinalityInd> CARDINALITY <classComb>
                 | PROPERTY <ambiExactCardInd> CARDINALITY <classComb>
                 | PROPERTY CARDINALITY <classComb>
<qualMinCard>  ::= PROPERTY <preMinCardInd> CARDINALITY <classComb>
                 | PROPERTY CARDINALITY <postMinCardInd> <classComb>
<qualMaxCard>  ::= PROPERTY <preMaxCardInd> CARDINALITY <classComb>
                 | PROPERTY CARDINALITY <postMaxCardInd> <classComb>
<indValueRes>  ::= PROPERTY INDIVIDUAL
<selfValueRes> ::= PROPERTY <selfInd>
<classComb>    ::= CLASS (<clsExpInd> <classComb>)*

<clsExpInd>           ::= 'AND' | 'OR' | ','
<unionInd>            ::= 'OR'
<intersectionInd>     ::= 'THAT' | 'WHICH' | 'WHO' | 'WHOSE'
<preComplementInd>    ::= 'DOES NOT' | 'DO NOT' | 'DID NOT' | 'IS NOT' | 'ARE NOT'
<postComplementInd>   ::= 'NOT' | 'NO'
<universalInd>        ::= 'EXCLUSIVELY' | 'NOTHING BUT' | 'NOTHING EXCEPT' | 'ONLY'
<existentialInd>      ::= 'A' | 'AN' | 'ALL' | 'ANY' | 'FEW' | 'MANY' | 'SOME' | 'SEVERAL'
<exactCardinalityInd> ::= 'EXACTLY' | 'JUST' | 'MAY BE' | 'ONLY'
<ambiExactCardInd>    ::= 'ABOUT' | 'ALMOST' | 'APPROXIMATELY' | 'AROUND' | 'CLOSE TO'
<preMinCardInd>       ::= 'ATLEAST' | 'AT LEAST' | 'LEAST' | 'MORE THAN' | 'NOT LESS THAN'
<postMinCardInd>      ::= 'OR MORE'
<preMaxCardInd>       ::= 'ATMOST' | 'AT MOST' | 'MOST' | 'LESS THAN' | 'NOT MORE THAN' | 'WITHIN'
<postMaxCardInd>      ::= 'OR LESS'
<selfInd>             ::= 'MYSELF' | 'OURSELVES' | 'YOURSELF' | 'YOURSELVES' | 'HIMSELF'
                        | 'HERSELF' | 'ITSELF' | 'THEMSELVES'
)";
}

}  // namespace tedei
