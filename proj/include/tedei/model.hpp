#pragma once

// Shared domain types for the sentence → axiom pipeline.

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tedei {

enum class ErrorCode {
  EmptySentence,
  EmptyIdentifier,
  InvalidIri,
  InternalInconsistency,
  Io,
  Parse,
  Config,
};

// "EmptySentence", "Io", ...
std::string_view to_string(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Penn Treebank tags are kept as strings ("NN", "VBZ", "PRP$", ".").
using PennTag = std::string;

struct Token {
  std::string surface;
  std::string lemma;
  PennTag pos;
  std::size_t index = 0;

  bool operator==(const Token&) const = default;
};

enum class SpanKind { Class, Individual, Property, Cardinality, Indicator };

enum class IndicatorKind {
  Union,
  Intersection,
  PreComplement,
  PostComplement,
  Universal,
  Existential,
  ExactCardinality,
  AmbiExactCard,
  PreMinCard,
  PostMinCard,
  PreMaxCard,
  PostMaxCard,
  Self,
  ClsExp,
};

std::string_view to_string(SpanKind k);
std::string_view to_string(IndicatorKind k);
std::optional<IndicatorKind> indicator_from_string(std::string_view name);

// A half-open token range [begin, end).
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool operator==(const TokenRange&) const = default;
  auto operator<=>(const TokenRange&) const = default;
};

struct TerminalSpan {
  SpanKind kind = SpanKind::Class;
  TokenRange range;
  std::optional<IndicatorKind> indicator;
  std::optional<int> value;

  // Throws InternalInconsistency when the indicator/value presence rules are violated.
  void validate() const;
  bool operator==(const TerminalSpan&) const = default;
};

struct Lexicalization {
  std::string sentenceId;
  std::vector<Token> tokens;
  std::vector<TerminalSpan> spans;
  std::vector<std::size_t> residue;  // token indices

  void validate() const;
  // Surface words of a span, in order.
  std::vector<std::string> words(const TerminalSpan& span) const;
  std::string text(const TerminalSpan& span) const;
  // Subject determiner residue ("every", "a", ...) if present.
  std::optional<std::string> subjectDeterminer() const;
  // Copula residue tokens ("is", "is a", "are", ...) in order.
  std::vector<std::size_t> copula() const;
};

enum class IdentifierKind { Concept, Property, Individual };

struct Identifier {
  IdentifierKind kind = IdentifierKind::Concept;
  std::vector<std::string> words;
  std::string canonical;
};

// Deterministic CamelCase naming. All-caps source words (≥2 letters) keep their casing.
std::string canonicalIdentifier(const std::vector<std::string>& words, IdentifierKind kind);

// ---------------------------------------------------------------------------
// Class expressions

struct ClassExpr;
using ClassExprPtr = std::shared_ptr<const ClassExpr>;

struct Atomic {
  std::string name;
};
struct Top {};
struct Intersection {
  std::vector<ClassExprPtr> operands;
};
struct Union {
  std::vector<ClassExprPtr> operands;
};
struct Complement {
  ClassExprPtr operand;
};
struct Existential {
  std::string property;
  ClassExprPtr filler;
};
struct Universal {
  std::string property;
  ClassExprPtr filler;
};
struct MinCard {
  int n = 0;
  std::string property;
  ClassExprPtr filler;
};
struct MaxCard {
  int n = 0;
  std::string property;
  ClassExprPtr filler;
};
struct ExactCard {
  int n = 0;
  std::string property;
  ClassExprPtr filler;
};
struct HasValue {
  std::string property;
  std::string individual;
};
struct HasSelf {
  std::string property;
};

struct ClassExpr {
  using Variant = std::variant<Atomic, Top, Intersection, Union, Complement, Existential, Universal,
                               MinCard, MaxCard, ExactCard, HasValue, HasSelf>;
  Variant node;
};

namespace cx {
ClassExprPtr atomic(std::string name);
ClassExprPtr top();
ClassExprPtr intersection(std::vector<ClassExprPtr> operands);
ClassExprPtr union_of(std::vector<ClassExprPtr> operands);
ClassExprPtr complement(ClassExprPtr operand);
ClassExprPtr some(std::string property, ClassExprPtr filler);
ClassExprPtr only(std::string property, ClassExprPtr filler);
ClassExprPtr min(int n, std::string property, ClassExprPtr filler);
ClassExprPtr max(int n, std::string property, ClassExprPtr filler);
ClassExprPtr exactly(int n, std::string property, ClassExprPtr filler);
ClassExprPtr has_value(std::string property, std::string individual);
ClassExprPtr has_self(std::string property);
// Intersection of the operands, or the operand itself when there is only one.
ClassExprPtr conjoin(std::vector<ClassExprPtr> operands);
ClassExprPtr disjoin(std::vector<ClassExprPtr> operands);
}  // namespace cx

// Flattens nested same-variant Intersections/Unions, removes duplicate operands and
// orders operands by canonical key. Idempotent.
ClassExprPtr normalize(const ClassExprPtr& expr);

// Structural equality (no normalization applied).
bool structurallyEqual(const ClassExpr& a, const ClassExpr& b);
bool structurallyEqual(const ClassExprPtr& a, const ClassExprPtr& b);
// Total order used for canonical operand ordering.
std::string canonicalKey(const ClassExpr& e);

// ---------------------------------------------------------------------------
// Axioms

enum class AxiomForm { SubClassOf, NonDefinitional };

struct Provenance {
  std::string sentenceId;
  std::size_t lexicalizationIndex = 0;
  std::size_t interpretationIndex = 0;
  bool approximateCardinality = false;
};

struct Axiom {
  AxiomForm form = AxiomForm::SubClassOf;
  ClassExprPtr lhs;  // SubClassOf: subclass; NonDefinitional: the conjunction
  ClassExprPtr rhs;  // SubClassOf: superclass; NonDefinitional: null
  Provenance provenance;

  static Axiom subClassOf(ClassExprPtr lhs, ClassExprPtr rhs, Provenance p = {});
  static Axiom nonDefinitional(ClassExprPtr conjuncts, Provenance p = {});
};

// Returns the axiom with both sides normalized.
Axiom normalize(const Axiom& a);
// Equality of normalized forms; provenance is ignored.
bool sameAxiom(const Axiom& a, const Axiom& b);

}  // namespace tedei
