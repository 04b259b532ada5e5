#pragma once

// Independent brute-force reference implementations used only by tests. Each
// one is written from the definition, with none of the library's shortcuts,
// so agreement is meaningful.

#include <cstdint>
#include <string>
#include <vector>

#include "lzdist/lz.hpp"
#include "lzdist/symbol_text.hpp"

namespace lzdist::testing {

// Sorts suffix indices with direct lexicographic comparison, O(n^2 log n).
std::vector<std::int32_t> naive_suffix_array(const SymbolText& text);

// Greedy longest-previous-match parse by scanning every earlier start,
// O(n^2). Same conventions as the library: overlap allowed, a length-1
// earlier match is a Copy, the source is the leftmost maximal occurrence.
LZFactorization naive_lz_factorize(const SymbolText& text);

// Full-table unit-cost edit distance over arbitrary element types.
template <typename Seq>
std::size_t dp_edit_distance(const Seq& a, const Seq& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<std::size_t>> d(n + 1, std::vector<std::size_t>(m + 1));
  for (std::size_t i = 0; i <= n; ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= m; ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      const std::size_t del = d[i - 1][j] + 1;
      const std::size_t ins = d[i][j - 1] + 1;
      d[i][j] = std::min(sub, std::min(del, ins));
    }
  return d[n][m];
}

std::size_t dp_levenshtein_utf8(const std::string& a, const std::string& b);

// Classic LCS dynamic program over token vectors.
std::size_t dp_lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b);

// Minimum of (#shifts + word edit distance) over every sequence of at most
// max_shifts block moves. Exponential; only for tiny fixtures.
std::size_t exhaustive_shift_edit_cost(const std::vector<std::string>& hypothesis,
                                       const std::vector<std::string>& reference,
                                       std::size_t max_shifts);

// Two-sided Student-t tail mass by Simpson quadrature of the density.
double t_two_sided_pvalue_quadrature(double t, double degrees_of_freedom);

}  // namespace lzdist::testing
