#pragma once

#include <cstdint>
#include <vector>

#include "lzdist/symbol_text.hpp"

namespace lzdist {

// sa[k] is the start of the k-th suffix in lexicographic order; rank is the
// inverse permutation (rank[sa[k]] == k).
struct SuffixArray {
  std::vector<std::int32_t> sa;
  std::vector<std::int32_t> rank;
};

// Builds the suffix array by induced sorting (SA-IS), worst-case O(n) time
// and O(n) extra space for integer alphabets.
SuffixArray build_suffix_array(const SymbolText& text);

}  // namespace lzdist
