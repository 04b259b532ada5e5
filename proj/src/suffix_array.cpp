#include "lzdist/suffix_array.hpp"

#include <cstdint>
#include <vector>

namespace lzdist {
namespace {

using std::int32_t;
using IntVec = std::vector<int32_t>;

// SA-IS (suffix array by induced sorting), Nong/Zhang/Chan style. The input
// at every level ends with a unique smallest sentinel value 0; the returned
// array includes the sentinel suffix at position 0.
class SaisBuilder {
 public:
  static IntVec run(const IntVec& s, int32_t alphabet) {
    const int32_t n = static_cast<int32_t>(s.size());
    IntVec sa(n, -1);
    if (n == 1) {
      sa[0] = 0;
      return sa;
    }

    // Type classification: t[i] true for S-type. The sentinel is S-type and
    // everything compares against its right neighbour.
    std::vector<bool> is_s(n);
    is_s[n - 1] = true;
    for (int32_t i = n - 2; i >= 0; --i)
      is_s[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && is_s[i + 1]);

    auto is_lms = [&](int32_t i) { return i > 0 && is_s[i] && !is_s[i - 1]; };

    IntVec lms;  // LMS positions in text order
    for (int32_t i = 1; i < n; ++i)
      if (is_lms(i)) lms.push_back(i);
    const int32_t lms_count = static_cast<int32_t>(lms.size());

    IntVec counts(alphabet, 0);
    for (int32_t v : s) ++counts[v];
    IntVec bkt(alphabet);

    auto bucket_starts = [&] {
      int32_t sum = 0;
      for (int32_t c = 0; c < alphabet; ++c) {
        bkt[c] = sum;
        sum += counts[c];
      }
    };
    auto bucket_ends = [&] {
      int32_t sum = 0;
      for (int32_t c = 0; c < alphabet; ++c) {
        sum += counts[c];
        bkt[c] = sum;
      }
    };

    // Seeds the LMS positions (given in the order they should land within
    // equal buckets) and induces L then S suffixes over the whole array.
    auto induce = [&](const IntVec& lms_order) {
      std::fill(sa.begin(), sa.end(), -1);
      bucket_ends();
      for (auto it = lms_order.rbegin(); it != lms_order.rend(); ++it) sa[--bkt[s[*it]]] = *it;
      bucket_starts();
      for (int32_t r = 0; r < n; ++r) {
        int32_t j = sa[r];
        if (j > 0 && !is_s[j - 1]) sa[bkt[s[j - 1]]++] = j - 1;
      }
      bucket_ends();
      for (int32_t r = n - 1; r >= 0; --r) {
        int32_t j = sa[r];
        if (j > 0 && is_s[j - 1]) sa[--bkt[s[j - 1]]] = j - 1;
      }
    };

    induce(lms);

    // LMS substrings are now in sorted order inside sa; name them. Equal
    // substrings (same symbols, same length, both ending at the next LMS
    // position inclusive) receive equal names.
    IntVec sorted_lms;
    sorted_lms.reserve(lms_count);
    for (int32_t r = 0; r < n; ++r)
      if (is_lms(sa[r])) sorted_lms.push_back(sa[r]);

    IntVec lms_index_of(n, -1);  // text position -> index in `lms`
    for (int32_t k = 0; k < lms_count; ++k) lms_index_of[lms[k]] = k;

    auto lms_end = [&](int32_t i) {
      int32_t k = lms_index_of[i];
      return k + 1 < lms_count ? lms[k + 1] : i;  // last LMS is the sentinel
    };

    IntVec names(lms_count, -1);  // per `lms` index
    int32_t name_count = 0;
    int32_t prev = -1;
    for (int32_t pos : sorted_lms) {
      if (prev >= 0) {
        int32_t ea = lms_end(prev), eb = lms_end(pos);
        bool equal = (ea - prev) == (eb - pos);
        for (int32_t d = 0; equal && d <= ea - prev; ++d) equal = s[prev + d] == s[pos + d];
        if (!equal) ++name_count;
      }
      names[lms_index_of[pos]] = name_count;
      prev = pos;
    }
    ++name_count;

    IntVec lms_sorted_suffixes;
    if (name_count == lms_count) {
      lms_sorted_suffixes = std::move(sorted_lms);
    } else {
      // Reduced problem: LMS names in text order. The sentinel LMS carries
      // the unique smallest name, so the precondition holds recursively.
      IntVec reduced(names.begin(), names.end());
      IntVec sa1 = run(reduced, name_count);
      lms_sorted_suffixes.resize(lms_count);
      for (int32_t k = 0; k < lms_count; ++k) lms_sorted_suffixes[k] = lms[sa1[k]];
    }

    induce(lms_sorted_suffixes);
    return sa;
  }
};

}  // namespace

SuffixArray build_suffix_array(const SymbolText& text) {
  const Symbol bound = text.alphabet_bound();
  for (Symbol v : text.symbols()) {
    if (v >= bound)
      throw InvalidInputError("symbol " + std::to_string(v) + " exceeds alphabet bound " +
                              std::to_string(bound));
  }

  SuffixArray result;
  const std::size_t n = text.size();
  if (n == 0) return result;

  // Shift symbols up by one and append the sentinel 0.
  IntVec s(n + 1);
  for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<int32_t>(text[i]) + 1;
  s[n] = 0;

  IntVec full = SaisBuilder::run(s, static_cast<int32_t>(bound) + 1);

  result.sa.assign(full.begin() + 1, full.end());  // drop the sentinel suffix
  result.rank.resize(n);
  for (std::size_t k = 0; k < n; ++k) result.rank[result.sa[k]] = static_cast<int32_t>(k);
  return result;
}

}  // namespace lzdist
