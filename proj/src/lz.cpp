#include "lzdist/lz.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "lzdist/error.hpp"
#include "lzdist/suffix_array.hpp"

namespace lzdist {
namespace {

using std::int32_t;

// Previous/next smaller value (by text position) over the suffix array, one
// stack pass. For every position i, psv[i] and nsv[i] are the positions of
// the lexicographically nearest suffixes on either side of suffix i that
// start earlier in the text, or -1. The longest previous factor at i is the
// longer of the matches against those two candidates.
void compute_psv_nsv(const std::vector<int32_t>& sa, std::vector<int32_t>& psv,
                     std::vector<int32_t>& nsv) {
  const std::size_t n = sa.size();
  psv.assign(n, -1);
  nsv.assign(n, -1);
  std::vector<int32_t> stack;
  stack.push_back(-1);
  for (std::size_t r = 0; r <= n; ++r) {
    const int32_t v = r < n ? sa[r] : -1;
    while (stack.back() > v) {
      const int32_t j = stack.back();
      stack.pop_back();
      nsv[j] = v;
      psv[j] = stack.back();
    }
    stack.push_back(v);
  }
}

// Shared greedy scan. Emit receives (position, source, length) where length 0
// denotes a literal. Match lengths are found by direct comparison; each
// candidate match is no longer than the phrase it produces, so the whole scan
// stays linear.
template <typename Emit>
std::size_t factorize_scan(const SymbolText& text, Emit emit) {
  const std::size_t n = text.size();
  if (n == 0) return 0;

  SuffixArray sa = build_suffix_array(text);
  std::vector<int32_t> psv, nsv;
  compute_psv_nsv(sa.sa, psv, nsv);

  auto match_len = [&](std::size_t i, int32_t j) -> std::size_t {
    if (j < 0) return 0;
    std::size_t k = 0;
    while (i + k < n && text[static_cast<std::size_t>(j) + k] == text[i + k]) ++k;
    return k;
  };

  std::size_t phrases = 0;
  std::size_t i = 0;
  while (i < n) {
    const std::size_t lp = match_len(i, psv[i]);
    const std::size_t ln = match_len(i, nsv[i]);
    if (lp == 0 && ln == 0) {
      emit(i, std::size_t{0}, std::size_t{0});
      ++i;
    } else {
      const std::size_t src = lp >= ln ? static_cast<std::size_t>(psv[i])
                                       : static_cast<std::size_t>(nsv[i]);
      const std::size_t len = lp >= ln ? lp : ln;
      emit(i, src, len);
      i += len;
    }
    ++phrases;
  }
  return phrases;
}

}  // namespace

LZFactorization lz_factorize(const SymbolText& text) {
  LZFactorization out;
  out.total_length = text.size();
  factorize_scan(text, [&](std::size_t pos, std::size_t src, std::size_t len) {
    if (len == 0)
      out.phrases.push_back(Phrase::literal(text[pos]));
    else
      out.phrases.push_back(Phrase::copy(src, len));
  });
  return out;
}

std::size_t lz_phrase_count(const SymbolText& text) {
  return factorize_scan(text, [](std::size_t, std::size_t, std::size_t) {});
}

SymbolText lz_decode(const LZFactorization& factorization) {
  std::vector<Symbol> out;
  out.reserve(factorization.total_length);
  for (std::size_t p = 0; p < factorization.phrases.size(); ++p) {
    const Phrase& ph = factorization.phrases[p];
    if (ph.is_literal()) {
      out.push_back(ph.symbol);
      continue;
    }
    if (ph.length == 0)
      throw ValidationError("phrase " + std::to_string(p) + ": zero-length copy");
    if (ph.source_start >= out.size())
      throw ValidationError("phrase " + std::to_string(p) + ": copy source " +
                            std::to_string(ph.source_start) + " not strictly earlier");
    for (std::size_t k = 0; k < ph.length; ++k) out.push_back(out[ph.source_start + k]);
  }
  if (out.size() != factorization.total_length)
    throw ValidationError("decoded length " + std::to_string(out.size()) +
                          " does not match recorded total " +
                          std::to_string(factorization.total_length));
  return SymbolText(std::move(out));
}

}  // namespace lzdist
