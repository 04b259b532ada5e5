#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lzdist/unicode.hpp"

namespace lzdist::testing {

std::vector<std::int32_t> naive_suffix_array(const SymbolText& text) {
  const std::size_t n = text.size();
  std::vector<std::int32_t> sa(n);
  std::iota(sa.begin(), sa.end(), 0);
  const auto& s = text.symbols();
  std::sort(sa.begin(), sa.end(), [&](std::int32_t a, std::int32_t b) {
    return std::lexicographical_compare(s.begin() + a, s.end(), s.begin() + b, s.end());
  });
  return sa;
}

LZFactorization naive_lz_factorize(const SymbolText& text) {
  const std::size_t n = text.size();
  LZFactorization out;
  out.total_length = n;
  std::size_t i = 0;
  while (i < n) {
    std::size_t best_len = 0, best_src = 0;
    for (std::size_t j = 0; j < i; ++j) {
      std::size_t k = 0;
      while (i + k < n && text[j + k] == text[i + k]) ++k;
      if (k > best_len) {
        best_len = k;
        best_src = j;
      }
    }
    if (best_len == 0) {
      out.phrases.push_back(Phrase::literal(text[i]));
      ++i;
    } else {
      out.phrases.push_back(Phrase::copy(best_src, best_len));
      i += best_len;
    }
  }
  return out;
}

std::size_t dp_levenshtein_utf8(const std::string& a, const std::string& b) {
  return dp_edit_distance(utf8_decode(a), utf8_decode(b));
}

std::size_t dp_lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<std::size_t>> d(n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      d[i][j] = a[i - 1] == b[j - 1] ? d[i - 1][j - 1] + 1
                                     : std::max(d[i - 1][j], d[i][j - 1]);
  return d[n][m];
}

std::size_t exhaustive_shift_edit_cost(const std::vector<std::string>& hypothesis,
                                       const std::vector<std::string>& reference,
                                       std::size_t max_shifts) {
  std::size_t best = dp_edit_distance(hypothesis, reference);
  if (max_shifts == 0 || hypothesis.empty()) return best;
  const std::size_t n = hypothesis.size();
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t len = 1; start + len <= n; ++len) {
      std::vector<std::string> rest;
      rest.reserve(n - len);
      rest.insert(rest.end(), hypothesis.begin(), hypothesis.begin() + start);
      rest.insert(rest.end(), hypothesis.begin() + start + len, hypothesis.end());
      for (std::size_t dest = 0; dest <= rest.size(); ++dest) {
        if (dest == start) continue;
        std::vector<std::string> moved = rest;
        moved.insert(moved.begin() + dest, hypothesis.begin() + start,
                     hypothesis.begin() + start + len);
        const std::size_t cost =
            1 + exhaustive_shift_edit_cost(moved, reference, max_shifts - 1);
        best = std::min(best, cost);
      }
    }
  }
  return best;
}

double t_two_sided_pvalue_quadrature(double t, double degrees_of_freedom) {
  const double v = degrees_of_freedom;
  const double log_norm =
      std::lgamma((v + 1.0) / 2.0) - std::lgamma(v / 2.0) - 0.5 * std::log(v * std::acos(-1.0));
  auto pdf = [&](double x) {
    return std::exp(log_norm - (v + 1.0) / 2.0 * std::log1p(x * x / v));
  };
  const double upper = std::fabs(t);
  const std::size_t steps = 200000;  // even
  const double h = upper / static_cast<double>(steps);
  double sum = pdf(0.0) + pdf(upper);
  for (std::size_t k = 1; k < steps; ++k)
    sum += pdf(h * static_cast<double>(k)) * (k % 2 == 1 ? 4.0 : 2.0);
  const double central = sum * h / 3.0;
  return std::max(0.0, 1.0 - 2.0 * central);
}

}  // namespace lzdist::testing
