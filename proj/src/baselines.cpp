#include "lzdist/baselines.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <vector>

#include "lzdist/unicode.hpp"

namespace lzdist {
namespace {

template <typename Elem>
std::size_t unit_edit_distance(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min(sub, std::min(prev[j], cur[j - 1]) + 1);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

bool occurs_contiguously(const std::vector<std::string>& block,
                         const std::vector<std::string>& reference) {
  if (block.size() > reference.size()) return false;
  for (std::size_t s = 0; s + block.size() <= reference.size(); ++s)
    if (std::equal(block.begin(), block.end(), reference.begin() + s)) return true;
  return false;
}

}  // namespace

TokenSequence TokenSequence::from_text(std::string_view text) {
  TokenSequence out;
  out.source_text.assign(text);
  std::string word;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!word.empty()) out.tokens.push_back(std::move(word));
      word.clear();
    } else {
      word.push_back(c);
    }
  }
  if (!word.empty()) out.tokens.push_back(std::move(word));
  return out;
}

MetricValue levenshtein(std::string_view a, std::string_view b) {
  const double d = static_cast<double>(unit_edit_distance(utf8_decode(a), utf8_decode(b)));
  return {"levenshtein", d, Orientation::HigherIsMoreDifferent};
}

MetricValue bleu(const TokenSequence& candidate, const TokenSequence& reference) {
  MetricValue out{"bleu", 0.0, Orientation::HigherIsMoreSimilar};
  const std::size_t c = candidate.size(), r = reference.size();
  if (c == 0) return out;

  const std::size_t max_order = std::min<std::size_t>(4, c);
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= max_order; ++n) {
    std::map<std::vector<std::string>, std::size_t> ref_counts;
    for (std::size_t i = 0; i + n <= r; ++i) {
      std::vector<std::string> gram(reference.tokens.begin() + i, reference.tokens.begin() + i + n);
      ++ref_counts[std::move(gram)];
    }
    std::map<std::vector<std::string>, std::size_t> cand_counts;
    const std::size_t total = c - n + 1;
    for (std::size_t i = 0; i + n <= c; ++i) {
      std::vector<std::string> gram(candidate.tokens.begin() + i, candidate.tokens.begin() + i + n);
      ++cand_counts[std::move(gram)];
    }
    std::size_t matched = 0;
    for (const auto& [gram, count] : cand_counts) {
      const auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) matched += std::min(count, it->second);
    }
    const double p = matched > 0 ? static_cast<double>(matched) / static_cast<double>(total)
                                 : 1.0 / (2.0 * static_cast<double>(total));
    log_sum += std::log(p);
  }

  double value = std::exp(log_sum / static_cast<double>(max_order));
  if (c < r) value *= std::exp(1.0 - static_cast<double>(r) / static_cast<double>(c));
  out.value = std::min(value, 1.0);
  return out;
}

MetricValue rouge_l(const TokenSequence& candidate, const TokenSequence& reference) {
  MetricValue out{"rouge_l", 0.0, Orientation::HigherIsMoreSimilar};
  const std::size_t c = candidate.size(), r = reference.size();
  if (c == 0 && r == 0) {
    out.value = 1.0;
    return out;
  }
  if (c == 0 || r == 0) return out;

  std::vector<std::size_t> prev(r + 1, 0), cur(r + 1, 0);
  for (std::size_t i = 1; i <= c; ++i) {
    for (std::size_t j = 1; j <= r; ++j)
      cur[j] = candidate.tokens[i - 1] == reference.tokens[j - 1]
                   ? prev[j - 1] + 1
                   : std::max(prev[j], cur[j - 1]);
    std::swap(prev, cur);
  }
  const std::size_t lcs = prev[r];
  if (lcs == 0) return out;

  const double p = static_cast<double>(lcs) / static_cast<double>(c);
  const double rec = static_cast<double>(lcs) / static_cast<double>(r);
  out.value = 2.0 * p * rec / (p + rec);
  return out;
}

MetricValue ter(const TokenSequence& hypothesis, const TokenSequence& reference) {
  MetricValue out{"ter", 0.0, Orientation::HigherIsMoreDifferent};
  const auto& ref = reference.tokens;
  if (ref.empty()) {
    out.value = static_cast<double>(hypothesis.size());
    return out;
  }

  constexpr std::size_t kMaxBlock = 10;
  std::vector<std::string> tokens = hypothesis.tokens;
  std::size_t edits = unit_edit_distance(tokens, ref);
  std::size_t shifts = 0;

  // Greedy: take the block move that lowers the remaining edit distance the
  // most, as long as it pays for its own cost of 1. Scan order (start, then
  // length, then destination) breaks ties deterministically.
  while (edits > 0 && !tokens.empty()) {
    std::size_t best_edits = edits;
    std::vector<std::string> best_tokens;
    for (std::size_t start = 0; start < tokens.size(); ++start) {
      for (std::size_t len = 1; len <= std::min(kMaxBlock, tokens.size() - start); ++len) {
        const std::vector<std::string> block(tokens.begin() + start,
                                             tokens.begin() + start + len);
        if (!occurs_contiguously(block, ref)) continue;
        std::vector<std::string> rest;
        rest.reserve(tokens.size() - len);
        rest.insert(rest.end(), tokens.begin(), tokens.begin() + start);
        rest.insert(rest.end(), tokens.begin() + start + len, tokens.end());
        for (std::size_t dest = 0; dest <= rest.size(); ++dest) {
          if (dest == start) continue;
          std::vector<std::string> moved = rest;
          moved.insert(moved.begin() + dest, block.begin(), block.end());
          const std::size_t e = unit_edit_distance(moved, ref);
          if (e < best_edits) {
            best_edits = e;
            best_tokens = std::move(moved);
          }
        }
      }
    }
    if (best_edits + 1 < edits) {
      tokens = std::move(best_tokens);
      edits = best_edits;
      ++shifts;
    } else {
      break;
    }
  }

  out.value = static_cast<double>(edits + shifts) / static_cast<double>(ref.size());
  return out;
}

}  // namespace lzdist
