#pragma once

#include <string>

#include "tedei/pipeline.hpp"

namespace tedei::testing {

inline bool hasAxiom(const Analysis& a, const std::string& dl) {
  auto wanted = parseDLAxiom(dl);
  for (const auto& alt : a.alternatives)
    if (sameAxiom(alt.axiom, wanted)) return true;
  return false;
}

// First alternative of the first lexicalization and tree.
inline const Alternative& first(const Analysis& a) { return a.alternatives.at(0); }

inline std::string sourceDir() { return TEDEI_SOURCE_DIR; }

}  // namespace tedei::testing
