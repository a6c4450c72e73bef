#pragma once

// Memoized backtracking recognizer that returns every derivation of a
// lexicalization under the sentence grammar.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tedei/lexicalizer.hpp"
#include "tedei/model.hpp"

namespace tedei {

enum class NodeKind {
  Start,
  Lexpr,
  Rexpr,
  Union,
  Intersection,
  ClsExpComb,
  ClsExp,
  Complement,
  UniRes,
  ExistRes,
  ExactCard,
  MinCard,
  MaxCard,
  QualExactCard,
  QualMinCard,
  QualMaxCard,
  IndValueRes,
  SelfValueRes,
  ClassComb,
  Terminal,
};

std::string_view to_string(NodeKind k);

struct ParseNode;
using ParseTree = std::shared_ptr<const ParseNode>;

struct ParseNode {
  NodeKind kind = NodeKind::Terminal;
  // Index of the production alternative used (0-based, in listed order).
  int alternative = 0;
  // Terminal index range [first, last) within Lexicalization::spans.
  std::size_t first = 0;
  std::size_t last = 0;
  std::vector<ParseTree> children;

  bool isTerminal() const { return kind == NodeKind::Terminal; }
  // Terminal leaves in order.
  std::vector<std::size_t> leaves() const;
  // Pre-order search.
  bool contains(NodeKind k) const;
};

// Token range covered by a node.
TokenRange tokenRange(const ParseNode& node, const Lexicalization& lex);

// One-line bracketed rendering, e.g. "(start (lexpr CLASS[adenine]) ...)".
std::string describe(const ParseNode& node, const Lexicalization& lex);

struct RecognizeResult {
  std::vector<ParseTree> trees;
  bool truncated = false;
  // Furthest terminal index the parser tried to read.
  std::size_t furthest = 0;
};

constexpr std::size_t kDefaultTreeCap = 1000;

RecognizeResult recognizeAll(const Lexicalization& lex, std::size_t tree_cap = kDefaultTreeCap);
std::vector<ParseTree> recognize(const Lexicalization& lex);

struct TedeiVerdict {
  bool tedei = false;
  std::string diagnostics;
  // Token index where recognition got furthest before failing.
  std::optional<std::size_t> failToken;
  std::size_t lexicalizations = 0;
  std::size_t tedeiLexicalizations = 0;
};

TedeiVerdict isTedeiSentence(std::string_view sentence, const Lexicalizer& lexicalizer = Lexicalizer(),
                             std::size_t cap = kDefaultLexicalizationCap);

// Builds reformulation diagnostics from a completed enumeration + parse pass.
std::string diagnose(const std::vector<Token>& tokens, std::optional<std::size_t> fail_token,
                     bool no_segmentation);

// The grammar as BNF text.
std::string grammarBnf();

}  // namespace tedei
