#include "tedei/backend.hpp"

#include <cctype>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace tedei {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool isNary(const ClassExprPtr& e) {
  return std::holds_alternative<Intersection>(e->node) || std::holds_alternative<Union>(e->node);
}

std::string dl(const ClassExprPtr& e);

std::string operand(const ClassExprPtr& e) { return isNary(e) ? "(" + dl(e) + ")" : dl(e); }

std::string nary(const std::vector<ClassExprPtr>& ops, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (i) s += sep;
    s += operand(ops[i]);
  }
  return s;
}

std::string dl(const ClassExprPtr& e) {
  return std::visit(
      overloaded{
          [](const Atomic& a) { return a.name; },
          [](const Top&) { return std::string("⊤"); },
          [](const Intersection& x) { return nary(x.operands, " ⊓ "); },
          [](const Union& x) { return nary(x.operands, " ⊔ "); },
          [](const Complement& x) { return "¬" + operand(x.operand); },
          [](const Existential& x) { return "∃" + x.property + "." + operand(x.filler); },
          [](const Universal& x) { return "∀" + x.property + "." + operand(x.filler); },
          [](const MinCard& x) { return "≥" + std::to_string(x.n) + " " + x.property + "." + operand(x.filler); },
          [](const MaxCard& x) { return "≤" + std::to_string(x.n) + " " + x.property + "." + operand(x.filler); },
          [](const ExactCard& x) { return "=" + std::to_string(x.n) + " " + x.property + "." + operand(x.filler); },
          [](const HasValue& x) { return "∃" + x.property + ".{" + x.individual + "}"; },
          [](const HasSelf& x) { return "∃" + x.property + ".Self"; },
      },
      e->node);
}

// ---- DL reader

enum class Tok { Ident, Number, Sub, And, Or, Not, Some, All, Ge, Le, Eq, Top, LParen, RParen, Dot, LBrace, RBrace, End };

struct Lexeme {
  Tok tok;
  std::string text;
  std::size_t pos;
};

std::vector<Lexeme> lexDL(std::string_view s) {
  static const std::vector<std::pair<std::string_view, Tok>> kSymbols{
      {"⊑", Tok::Sub}, {"⊓", Tok::And}, {"⊔", Tok::Or},     {"¬", Tok::Not},    {"∃", Tok::Some},
      {"∀", Tok::All}, {"≥", Tok::Ge},  {"≤", Tok::Le},     {"=", Tok::Eq},     {"⊤", Tok::Top},
      {"(", Tok::LParen}, {")", Tok::RParen}, {".", Tok::Dot}, {"{", Tok::LBrace}, {"}", Tok::RBrace}};
  std::vector<Lexeme> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t b = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(b, i - b)), b});
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t b = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(b, i - b)), b});
      continue;
    }
    bool matched = false;
    for (const auto& [sym, tok] : kSymbols) {
      if (s.substr(i, sym.size()) == sym) {
        out.push_back({tok, std::string(sym), i});
        i += sym.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw Error(ErrorCode::Parse, "DL notation: unexpected character at byte " + std::to_string(i));
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class DLReader {
 public:
  explicit DLReader(std::string_view text) : toks_(lexDL(text)) {}

  ClassExprPtr expression() {
    auto e = unionExpr();
    return e;
  }
  bool at(Tok t) const { return toks_[i_].tok == t; }
  void expect(Tok t, const char* what) {
    if (!at(t)) fail(std::string("expected ") + what);
    ++i_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, "DL notation: " + why + " at byte " + std::to_string(toks_[i_].pos));
  }

  ClassExprPtr unionExpr() {
    std::vector<ClassExprPtr> ops{interExpr()};
    while (at(Tok::Or)) {
      ++i_;
      ops.push_back(interExpr());
    }
    return cx::disjoin(std::move(ops));
  }
  ClassExprPtr interExpr() {
    std::vector<ClassExprPtr> ops{unary()};
    while (at(Tok::And)) {
      ++i_;
      ops.push_back(unary());
    }
    return cx::conjoin(std::move(ops));
  }
  std::string ident(const char* what) {
    if (!at(Tok::Ident)) fail(std::string("expected ") + what);
    return toks_[i_++].text;
  }
  // ".filler" or nothing (⊤).
  ClassExprPtr optFiller() {
    if (!at(Tok::Dot)) return cx::top();
    ++i_;
    return unary();
  }
  ClassExprPtr unary() {
    switch (toks_[i_].tok) {
      case Tok::Not: ++i_; return cx::complement(unary());
      case Tok::Top: ++i_; return cx::top();
      case Tok::LParen: {
        ++i_;
        auto e = unionExpr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident: return cx::atomic(toks_[i_++].text);
      case Tok::Some: {
        ++i_;
        auto p = ident("property name");
        if (!at(Tok::Dot)) return cx::some(p, cx::top());
        ++i_;
        if (at(Tok::LBrace)) {
          ++i_;
          auto ind = ident("individual name");
          expect(Tok::RBrace, "'}'");
          return cx::has_value(p, ind);
        }
        if (at(Tok::Ident) && toks_[i_].text == "Self") {
          ++i_;
          return cx::has_self(p);
        }
        return cx::some(p, unary());
      }
      case Tok::All: {
        ++i_;
        auto p = ident("property name");
        expect(Tok::Dot, "'.'");
        return cx::only(p, unary());
      }
      case Tok::Ge:
      case Tok::Le:
      case Tok::Eq: {
        Tok op = toks_[i_++].tok;
        if (!at(Tok::Number)) fail("expected a number");
        int n = std::stoi(toks_[i_++].text);
        auto p = ident("property name");
        auto f = optFiller();
        if (op == Tok::Ge) return cx::min(n, p, f);
        if (op == Tok::Le) return cx::max(n, p, f);
        return cx::exactly(n, p, f);
      }
      default: fail("expected a class expression");
    }
  }

  std::vector<Lexeme> toks_;
  std::size_t i_ = 0;
};

// ---- functional syntax

void collectNames(const ClassExprPtr& e, std::set<std::string>& classes, std::set<std::string>& props,
                  std::set<std::string>& inds) {
  std::visit(overloaded{
                 [&](const Atomic& a) { classes.insert(a.name); },
                 [](const Top&) {},
                 [&](const Intersection& x) {
                   for (const auto& o : x.operands) collectNames(o, classes, props, inds);
                 },
                 [&](const Union& x) {
                   for (const auto& o : x.operands) collectNames(o, classes, props, inds);
                 },
                 [&](const Complement& x) { collectNames(x.operand, classes, props, inds); },
                 [&](const auto& r) {
                   using T = std::decay_t<decltype(r)>;
                   props.insert(r.property);
                   if constexpr (requires { r.filler; }) collectNames(r.filler, classes, props, inds);
                   if constexpr (std::is_same_v<T, HasValue>) inds.insert(r.individual);
                 },
             },
             e->node);
}

std::string ofn(const ClassExprPtr& e) {
  auto list = [](const char* ctor, const std::vector<ClassExprPtr>& ops) {
    std::string s = ctor;
    s += "(";
    for (std::size_t i = 0; i < ops.size(); ++i) s += (i ? " " : "") + ofn(ops[i]);
    return s + ")";
  };
  auto card = [](const char* ctor, int n, const std::string& p, const ClassExprPtr& f) {
    std::string s = std::string(ctor) + "(" + std::to_string(n) + " :" + p;
    if (!std::holds_alternative<Top>(f->node)) s += " " + ofn(f);
    return s + ")";
  };
  return std::visit(
      overloaded{
          [](const Atomic& a) { return ":" + a.name; },
          [](const Top&) { return std::string("owl:Thing"); },
          [&](const Intersection& x) { return list("ObjectIntersectionOf", x.operands); },
          [&](const Union& x) { return list("ObjectUnionOf", x.operands); },
          [](const Complement& x) { return "ObjectComplementOf(" + ofn(x.operand) + ")"; },
          [](const Existential& x) { return "ObjectSomeValuesFrom(:" + x.property + " " + ofn(x.filler) + ")"; },
          [](const Universal& x) { return "ObjectAllValuesFrom(:" + x.property + " " + ofn(x.filler) + ")"; },
          [&](const MinCard& x) { return card("ObjectMinCardinality", x.n, x.property, x.filler); },
          [&](const MaxCard& x) { return card("ObjectMaxCardinality", x.n, x.property, x.filler); },
          [&](const ExactCard& x) { return card("ObjectExactCardinality", x.n, x.property, x.filler); },
          [](const HasValue& x) { return "ObjectHasValue(:" + x.property + " :" + x.individual + ")"; },
          [](const HasSelf& x) { return "ObjectHasSelf(:" + x.property + ")"; },
      },
      e->node);
}

// ---- JSON

const char* kTypeNames[] = {"Atomic",  "Top",     "Intersection", "Union",     "Complement", "Existential",
                            "Universal", "MinCard", "MaxCard",     "ExactCard", "HasValue",   "HasSelf"};

}  // namespace

Axiom toAxiom(const Interpretation& interp, const std::string& sentence_id) {
  Provenance p;
  p.sentenceId = sentence_id.empty() && interp.lexicalization ? interp.lexicalization->sentenceId : sentence_id;
  p.lexicalizationIndex = interp.lexicalizationIndex;
  p.interpretationIndex = interp.interpretationIndex;
  p.approximateCardinality = interp.approximateCardinality;
  if (interp.form == InterpretationForm::Definitional)
    return normalize(Axiom::subClassOf(interp.lhs, interp.rhs, p));
  return normalize(Axiom::nonDefinitional(cx::conjoin({interp.lhs, interp.rhs}), p));
}

std::string serializeDL(const ClassExprPtr& expr) { return dl(normalize(expr)); }

std::string serializeDL(const Axiom& axiom) {
  auto a = normalize(axiom);
  if (a.form == AxiomForm::NonDefinitional) return dl(a.lhs) + " ⊑ ⊤";
  return dl(a.lhs) + " ⊑ " + dl(a.rhs);
}

ClassExprPtr parseDLExpr(std::string_view text) {
  DLReader r(text);
  auto e = r.expression();
  if (!r.at(Tok::End)) r.fail("trailing input");
  return e;
}

Axiom parseDLAxiom(std::string_view text) {
  DLReader r(text);
  auto lhs = r.expression();
  r.expect(Tok::Sub, "'⊑'");
  auto rhs = r.expression();
  if (!r.at(Tok::End)) r.fail("trailing input");
  if (std::holds_alternative<Top>(rhs->node) && std::holds_alternative<Intersection>(lhs->node))
    return normalize(Axiom::nonDefinitional(lhs));
  return normalize(Axiom::subClassOf(lhs, rhs));
}

bool isValidIri(std::string_view iri) {
  static const std::regex kIri(R"(^[A-Za-z][A-Za-z0-9+.\-]*:[^\s<>"{}|\\^`]+$)");
  return std::regex_match(iri.begin(), iri.end(), kIri);
}

std::string functionalAxiom(const Axiom& axiom) {
  auto a = normalize(axiom);
  if (a.form == AxiomForm::NonDefinitional) return "SubClassOf(" + ofn(a.lhs) + " owl:Thing)";
  return "SubClassOf(" + ofn(a.lhs) + " " + ofn(a.rhs) + ")";
}

std::string serializeFunctional(const std::vector<Axiom>& axioms, const std::string& ontology_iri) {
  if (!isValidIri(ontology_iri)) throw Error(ErrorCode::InvalidIri, "not an absolute IRI: " + ontology_iri);
  std::string ns = ontology_iri;
  if (!ns.ends_with("#") && !ns.ends_with("/")) ns += "#";
  std::set<std::string> classes, props, inds;
  for (const auto& a : axioms) {
    collectNames(a.lhs, classes, props, inds);
    if (a.rhs) collectNames(a.rhs, classes, props, inds);
  }
  std::ostringstream out;
  out << "Prefix(:=<" << ns << ">)\n"
      << "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)\n"
      << "Prefix(rdf:=<http://www.w3.org/1999/02/22-rdf-syntax-ns#>)\n"
      << "Prefix(rdfs:=<http://www.w3.org/2000/01/rdf-schema#>)\n"
      << "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n\n"
      << "Ontology(<" << ontology_iri << ">\n";
  for (const auto& c : classes) out << "Declaration(Class(:" << c << "))\n";
  for (const auto& p : props) out << "Declaration(ObjectProperty(:" << p << "))\n";
  for (const auto& i : inds) out << "Declaration(NamedIndividual(:" << i << "))\n";
  for (const auto& a : axioms) out << functionalAxiom(a) << "\n";
  out << ")\n";
  return out.str();
}

nlohmann::json exprToJson(const ClassExprPtr& e) {
  nlohmann::json j;
  j["type"] = kTypeNames[e->node.index()];
  auto ops = [](const std::vector<ClassExprPtr>& xs) {
    auto arr = nlohmann::json::array();
    for (const auto& x : xs) arr.push_back(exprToJson(x));
    return arr;
  };
  std::visit(overloaded{
                 [&](const Atomic& a) { j["name"] = a.name; },
                 [](const Top&) {},
                 [&](const Intersection& x) { j["operands"] = ops(x.operands); },
                 [&](const Union& x) { j["operands"] = ops(x.operands); },
                 [&](const Complement& x) { j["operand"] = exprToJson(x.operand); },
                 [&](const HasValue& x) {
                   j["property"] = x.property;
                   j["individual"] = x.individual;
                 },
                 [&](const HasSelf& x) { j["property"] = x.property; },
                 [&](const auto& r) {
                   if constexpr (requires { r.n; }) j["n"] = r.n;
                   j["property"] = r.property;
                   j["filler"] = exprToJson(r.filler);
                 },
             },
             e->node);
  return j;
}

ClassExprPtr exprFromJson(const nlohmann::json& j) {
  try {
    auto type = j.at("type").get<std::string>();
    auto ops = [&] {
      std::vector<ClassExprPtr> xs;
      for (const auto& o : j.at("operands")) xs.push_back(exprFromJson(o));
      return xs;
    };
    auto prop = [&] { return j.at("property").get<std::string>(); };
    auto filler = [&] { return exprFromJson(j.at("filler")); };
    auto n = [&] { return j.at("n").get<int>(); };
    if (type == "Atomic") return cx::atomic(j.at("name").get<std::string>());
    if (type == "Top") return cx::top();
    if (type == "Intersection") return cx::intersection(ops());
    if (type == "Union") return cx::union_of(ops());
    if (type == "Complement") return cx::complement(exprFromJson(j.at("operand")));
    if (type == "Existential") return cx::some(prop(), filler());
    if (type == "Universal") return cx::only(prop(), filler());
    if (type == "MinCard") return cx::min(n(), prop(), filler());
    if (type == "MaxCard") return cx::max(n(), prop(), filler());
    if (type == "ExactCard") return cx::exactly(n(), prop(), filler());
    if (type == "HasValue") return cx::has_value(prop(), j.at("individual").get<std::string>());
    if (type == "HasSelf") return cx::has_self(prop());
    throw Error(ErrorCode::Parse, "unknown expression type '" + type + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed expression JSON: ") + e.what());
  }
}

nlohmann::json axiomToJson(const Axiom& axiom) {
  auto a = normalize(axiom);
  nlohmann::json j;
  if (a.form == AxiomForm::SubClassOf) {
    j["form"] = "SubClassOf";
    j["lhs"] = exprToJson(a.lhs);
    j["rhs"] = exprToJson(a.rhs);
  } else {
    j["form"] = "NonDefinitional";
    j["conjuncts"] = exprToJson(a.lhs);
  }
  j["dl"] = serializeDL(a);
  j["provenance"] = {{"sentenceId", a.provenance.sentenceId},
                     {"lexicalizationIndex", a.provenance.lexicalizationIndex},
                     {"interpretationIndex", a.provenance.interpretationIndex},
                     {"approximateCardinality", a.provenance.approximateCardinality}};
  return j;
}

Axiom axiomFromJson(const nlohmann::json& j) {
  try {
    Provenance p;
    if (j.contains("provenance")) {
      const auto& pj = j.at("provenance");
      p.sentenceId = pj.value("sentenceId", "");
      p.lexicalizationIndex = pj.value("lexicalizationIndex", std::size_t{0});
      p.interpretationIndex = pj.value("interpretationIndex", std::size_t{0});
      p.approximateCardinality = pj.value("approximateCardinality", false);
    }
    auto form = j.at("form").get<std::string>();
    if (form == "SubClassOf") return normalize(Axiom::subClassOf(exprFromJson(j.at("lhs")), exprFromJson(j.at("rhs")), p));
    if (form == "NonDefinitional") return normalize(Axiom::nonDefinitional(exprFromJson(j.at("conjuncts")), p));
    throw Error(ErrorCode::Parse, "unknown axiom form '" + form + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed axiom JSON: ") + e.what());
  }
}

// ---- expressivity

namespace {

struct Census {
  bool union_ = false, fullComplement = false, atomicNegation = false, fullExists = false;
  bool universal = false, limitedExists = false;
  bool qualified = false, unqualified = false, nominal = false, self = false;

  void visit(const ClassExprPtr& e) {
    std::visit(overloaded{
                   [](const Atomic&) {},
                   [](const Top&) {},
                   [&](const Intersection& x) {
                     for (const auto& o : x.operands) visit(o);
                   },
                   [&](const Union& x) {
                     union_ = true;
                     for (const auto& o : x.operands) visit(o);
                   },
                   [&](const Complement& x) {
                     if (std::holds_alternative<Atomic>(x.operand->node)) atomicNegation = true;
                     else fullComplement = true;
                     visit(x.operand);
                   },
                   [&](const Existential& x) {
                     if (std::holds_alternative<Top>(x.filler->node)) limitedExists = true;
                     else fullExists = true;
                     visit(x.filler);
                   },
                   [&](const Universal& x) {
                     universal = true;
                     visit(x.filler);
                   },
                   [&](const HasValue&) { nominal = fullExists = true; },
                   [&](const HasSelf&) { self = true; },
                   [&](const auto& c) {
                     if (std::holds_alternative<Top>(c.filler->node)) unqualified = true;
                     else qualified = true;
                     visit(c.filler);
                   },
               },
               e->node);
  }
};

}  // namespace

std::string expressivity(const std::vector<Axiom>& axioms) {
  Census c;
  for (const auto& a : axioms) {
    c.visit(a.lhs);
    if (a.rhs) c.visit(a.rhs);
  }
  bool anything = c.union_ || c.fullComplement || c.atomicNegation || c.fullExists || c.universal ||
                  c.limitedExists || c.qualified || c.unqualified || c.nominal || c.self;
  if (!anything) return "AL-fragment";
  std::string name = "AL";
  if (c.fullComplement || (c.union_ && c.fullExists)) {
    name += "C";
  } else {
    if (c.union_) name += "U";
    if (c.fullExists) name += "E";
  }
  if (c.nominal) name += "O";
  if (c.qualified) name += "Q";
  else if (c.unqualified) name += "N";
  if (c.self) name += "(Self)";
  return name;
}

}  // namespace tedei
