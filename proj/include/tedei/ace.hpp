#pragma once

// Rewrites an interpretation as an ACE sentence (surface stage), prefixes its
// content words with lexicon tags (tagging stage), and reads tagged ACE back.

#include <string>
#include <string_view>

#include "tedei/indicators.hpp"
#include "tedei/interpreter.hpp"

namespace tedei {

struct SurfaceOptions {
  bool hyphenate = true;
};

// Articles, "something" fillers and coordination distribution applied; multi-word
// terms hyphenated unless opts.hyphenate is false.
std::string surfaceTransform(const Interpretation& interp, const SurfaceOptions& opts = {});

// Adds n:/v:/p: prefixes to the content words of surface text produced for `lex`.
// Throws Error(InternalInconsistency) for a word it cannot classify.
std::string tagTransform(std::string_view ace_text, const Lexicalization& lex);

struct AceReading {
  ClassExprPtr subject;
  ClassExprPtr rhs;
};

// Reads the tagged ACE subset written by tagTransform; names are resolved
// through `lex`. Throws Error(Parse).
AceReading fromTaggedAce(std::string_view tagged, const Lexicalization& lex,
                         const IndicatorTables& tables = IndicatorTables::standard());

}  // namespace tedei
