#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lzdist {

// Word tokens: trimmed, whitespace-split, case preserved, punctuation kept
// attached. Joining with single spaces and re-splitting is idempotent.
struct TokenSequence {
  std::vector<std::string> tokens;
  std::string source_text;

  static TokenSequence from_text(std::string_view text);
  std::size_t size() const { return tokens.size(); }
};

enum class Orientation { HigherIsMoreSimilar, HigherIsMoreDifferent };

struct MetricValue {
  std::string name;
  double value = 0.0;
  Orientation orientation = Orientation::HigherIsMoreDifferent;
};

// Character-level edit distance with unit costs, computed over Unicode scalar
// values (UTF-8 input; invalid bytes decode to U+FFFD).
MetricValue levenshtein(std::string_view a, std::string_view b);

// Sentence BLEU, n-gram orders 1..4 restricted to orders the candidate can
// form, geometric mean of modified precisions with floor smoothing (a zero
// match count scores as half a match, flooring the precision at
// 1/(2 * candidate n-gram count)), times the brevity penalty exp(1 - r/c)
// when c < r. Empty candidate scores 0.
MetricValue bleu(const TokenSequence& candidate, const TokenSequence& reference);

// LCS-based F1: P = LCS/|candidate|, R = LCS/|reference|, F = 2PR/(P+R).
// 0 when the LCS is empty; 1 when both sequences are empty.
MetricValue rouge_l(const TokenSequence& candidate, const TokenSequence& reference);

// Translation edit rate: (word edits + shifts) / |reference|. Shifts follow
// the greedy loop of the original definition: repeatedly apply the block move
// that most reduces the remaining word edit distance, each costing 1, so the
// result never exceeds plain word edit rate. Empty reference with a nonempty
// hypothesis scores |hypothesis|.
MetricValue ter(const TokenSequence& hypothesis, const TokenSequence& reference);

}  // namespace lzdist
