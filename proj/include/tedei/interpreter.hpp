#pragma once

// Semantic ambiguity handling: turns a parse tree into one or more
// interpretations (quantifier choice x axiom form) via a pattern registry.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tedei/grammar.hpp"
#include "tedei/lexicalizer.hpp"
#include "tedei/model.hpp"

namespace tedei {

enum class InterpretationForm { Definitional, NonDefinitional };
enum class QuantifierChoice { AsParsed, ForcedExistential, ForcedUniversal, ExistentialAndUniversal };

std::string_view to_string(InterpretationForm f);
std::string_view to_string(QuantifierChoice q);

// How two neighbouring parts of a clause are connected.
enum class JoinKind { Implicit, And, Or, Comma, That };

struct Join {
  JoinKind kind = JoinKind::Implicit;
  std::optional<std::size_t> span;  // indicator span carrying the connective, if any
};

enum class PartKind { Class, Exists, Forall, Exact, Min, Max, Value, Self, NegExists };

// One conjunct or disjunct of the right-hand side after coordination has been
// distributed: a class mention or a single property restriction.
struct ClausePart {
  PartKind kind = PartKind::Class;
  std::optional<std::size_t> property;    // span index
  std::optional<std::size_t> filler;      // class span index; absent means ⊤
  std::optional<std::size_t> individual;  // span index for Value
  std::optional<std::size_t> indicator;   // quantifier / cardinality / negation / self indicator span
  std::optional<std::size_t> cardinal;    // cardinality span
  int n = 0;
  bool approximate = false;
  bool indicatorFirst = false;  // "only eats ..." / "does not eat ..."
  bool forced = false;          // quantifier replaced by interpretation choice
  bool borrowed = false;        // filler copied from a coordinated verb phrase
  bool p1Eligible = false;      // existential restriction subject to quantifier expansion
  std::size_t group = 0;        // restriction (or class run) this part was distributed from
};

struct Clause {
  std::size_t subject = 0;  // span index
  std::vector<ClausePart> parts;
  std::vector<Join> joins;  // joins[i] connects parts[i] and parts[i+1]
};

// Record of a modifier split applied to a restriction filler.
struct SplitDelta {
  std::size_t part = 0;        // index of the restriction whose filler was split
  std::size_t headSpan = 0;    // class span that became a restriction copy
};

struct Interpretation {
  InterpretationForm form = InterpretationForm::Definitional;
  QuantifierChoice quantifier = QuantifierChoice::AsParsed;
  ClassExprPtr lhs;
  ClassExprPtr rhs;
  Clause clause;
  std::vector<SplitDelta> splits;
  std::shared_ptr<const Lexicalization> lexicalization;
  std::size_t lexicalizationIndex = 0;
  std::size_t treeIndex = 0;
  std::size_t interpretationIndex = 0;
  bool approximateCardinality = false;
  std::vector<std::string> patterns;  // names of registry patterns that fired
};

// ---------------------------------------------------------------------------
// Pattern registry

enum class Expansion { AsParsed, Exists, Forall, ExistsForall, Definitional, NonDefinitional };

struct TriggerExpr;
using TriggerPtr = std::shared_ptr<const TriggerExpr>;

struct TriggerExpr {
  enum class Op { Atom, Not, And, Or } op = Op::Atom;
  std::string atom;  // "has:uniRes", "has-filler:existRes", "subject:indefinite", ...
  std::vector<TriggerPtr> operands;
};

TriggerPtr parseTrigger(std::string_view text);

struct AmbiguityPattern {
  std::string name;
  std::string triggerText;
  TriggerPtr trigger;
  std::vector<Expansion> expansions;
};

class PatternRegistry {
 public:
  // Loads P1/P2 followed by any patterns in `text`.
  static PatternRegistry parse(std::string_view text);
  static PatternRegistry load(const std::string& path);
  static const PatternRegistry& standard();

  void add(AmbiguityPattern p);
  const std::vector<AmbiguityPattern>& patterns() const { return patterns_; }

 private:
  std::vector<AmbiguityPattern> patterns_;
};

// Evaluates a trigger against a tree and its lexicalization.
bool triggers(const TriggerExpr& t, const ParseNode& tree, const Lexicalization& lex);

// ---------------------------------------------------------------------------

// Flattens a tree into a clause (coordination distributed, verb-phrase fillers
// shared) without any quantifier expansion.
Clause flatten(const ParseNode& tree, const Lexicalization& lex);

// Turns restriction/class adjacency inside a single noun phrase into a distributed
// restriction. Mutates the clause and reports what changed.
std::vector<SplitDelta> applyModifierSplit(Clause& clause, const Lexicalization& lex,
                                           const PatternSet& patterns = PatternSet::standard());

// Canonical names for spans of a lexicalization.
std::string conceptName(const Lexicalization& lex, std::size_t span);
std::string propertyName(const Lexicalization& lex, std::size_t span);
std::string individualName(const Lexicalization& lex, std::size_t span);
// The subject's class name; a bare plural subject is singularized.
std::string subjectName(const Lexicalization& lex, std::size_t span);
// "indefinite", "universal", "bare-plural" or "bare".
std::string subjectKind(const Lexicalization& lex, std::size_t span);

ClassExprPtr partExpr(const ClausePart& p, const Lexicalization& lex);
// Flat precedence: "or" separates disjuncts, every other join conjoins.
ClassExprPtr clauseExpr(const Clause& c, const Lexicalization& lex);
ClassExprPtr subjectExpr(const Clause& c, const Lexicalization& lex);

// Applies a quantifier choice to the clause's eligible existential restrictions.
Clause applyQuantifier(const Clause& c, QuantifierChoice q);

struct InterpretOptions {
  const PatternRegistry* registry = nullptr;  // null → standard
  const PatternSet* patterns = nullptr;       // null → standard
};

std::vector<Interpretation> interpret(const ParseTree& tree, std::shared_ptr<const Lexicalization> lex,
                                      const InterpretOptions& opts = {});

}  // namespace tedei
