#pragma once

#include <string_view>

namespace tedei::resources {

// Contents of data/*.tsv, embedded at build time.
std::string_view lexicon();
std::string_view patterns();
std::string_view ambiguityPatterns();

}  // namespace tedei::resources
