#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "lzdist/baselines.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace lzdist;
using namespace lzdist::testing;

namespace {

TokenSequence toks(const std::string& text) { return TokenSequence::from_text(text); }

std::string random_sentence(std::mt19937_64& rng, std::size_t words, unsigned vocab) {
  std::ostringstream out;
  for (std::size_t i = 0; i < words; ++i) {
    if (i) out << ' ';
    out << "w" << draw(rng, vocab);
  }
  return out.str();
}

}  // namespace

TEST_SUITE("baselines") {

TEST_CASE("tokenizer splits on whitespace runs and trims") {
  CHECK(toks("a b  c").tokens == std::vector<std::string>{"a", "b", "c"});
  CHECK(toks("  leading and\ttrailing\n").tokens ==
        std::vector<std::string>{"leading", "and", "trailing"});
  CHECK(toks("").tokens.empty());
  CHECK(toks("   ").tokens.empty());
  CHECK(toks("punct, stays.").tokens == std::vector<std::string>{"punct,", "stays."});
}

TEST_CASE("levenshtein matches classic fixtures") {
  CHECK(levenshtein("kitten", "sitting").value == 3.0);
  CHECK(levenshtein("", "").value == 0.0);
  CHECK(levenshtein("abc", "").value == 3.0);
  CHECK(levenshtein("", "abc").value == 3.0);
  CHECK(levenshtein("same", "same").value == 0.0);
  CHECK(levenshtein("flaw", "lawn").value == 2.0);
  CHECK(levenshtein("abc", "abc").name == "levenshtein");
  CHECK(levenshtein("abc", "abc").orientation == Orientation::HigherIsMoreDifferent);
}

TEST_CASE("levenshtein counts Unicode scalars, not bytes") {
  CHECK(levenshtein("caf\xc3\xa9", "cafe").value == 1.0);
  CHECK(levenshtein("\xc3\xa9", "").value == 1.0);
  // Invalid bytes decode to U+FFFD, so two different invalid bytes compare equal.
  CHECK(levenshtein("\xff", "\xfd").value == 0.0);
}

TEST_CASE("levenshtein equals the full-table oracle on random pairs") {
  std::mt19937_64 rng(20240819);
  for (int i = 0; i < 1000; ++i) {
    const std::string a = random_string(rng, draw(rng, 40), 2 + unsigned(draw(rng, 25)));
    const std::string b = random_string(rng, draw(rng, 40), 2 + unsigned(draw(rng, 25)));
    CAPTURE(a);
    CAPTURE(b);
    CHECK(levenshtein(a, b).value == double(dp_levenshtein_utf8(a, b)));
  }
}

TEST_CASE("levenshtein is a metric on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const std::string a = random_string(rng, draw(rng, 12), 3);
    const std::string b = random_string(rng, draw(rng, 12), 3);
    const std::string c = random_string(rng, draw(rng, 12), 3);
    const double ab = levenshtein(a, b).value;
    const double ba = levenshtein(b, a).value;
    const double ac = levenshtein(a, c).value;
    const double cb = levenshtein(c, b).value;
    CHECK(levenshtein(a, a).value == 0.0);
    CHECK(ab == ba);
    CHECK(ab <= ac + cb);
  }
}

TEST_CASE("bleu matches the hand-computed overlap fixture") {
  // Precisions 4/8, 3/7, 2/6, 1/5 multiply to 1/70; brevity penalty is 1.
  const double expected = std::pow(1.0 / 70.0, 0.25);
  CHECK(bleu(toks("a b c d e f g h"), toks("a b c d x y z w")).value ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("bleu boundary behavior") {
  CHECK(bleu(toks("a b c d"), toks("a b c d")).value == 1.0);
  CHECK(bleu(toks("a b"), toks("a b")).value == 1.0);  // short candidate, orders 1..2
  CHECK(bleu(toks(""), toks("a b")).value == 0.0);
  CHECK(bleu(toks(""), toks("")).value == 0.0);
  // No n-gram matches anywhere: every precision sits at its floor 1/(2 c_n),
  // giving (1/6 * 1/4 * 1/2)^(1/3) with a brevity penalty of 1.
  CHECK(bleu(toks("x y z"), toks("a b c")).value ==
        doctest::Approx(std::pow(1.0 / 48.0, 1.0 / 3.0)).epsilon(1e-12));
  // With a long disjoint candidate the floors compound below 0.01:
  // (1/120 * 1/118 * 1/116 * 1/114)^(1/4).
  std::string disjoint;
  for (int i = 0; i < 60; ++i) disjoint += "w" + std::to_string(i) + " ";
  const double floored = bleu(toks(disjoint), toks("a b c")).value;
  CHECK(floored > 0.0);
  CHECK(floored < 0.01);
  CHECK(bleu(toks("a"), toks("a")).value == 1.0);
  CHECK(bleu(toks("a b c"), toks("a b c")).orientation == Orientation::HigherIsMoreSimilar);
}

TEST_CASE("bleu brevity penalty punishes short candidates") {
  // Perfect precision but half length: BP = exp(1 - 8/4).
  const double v = bleu(toks("a b c d"), toks("a b c d e f g h")).value;
  CHECK(v == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  // No penalty when the candidate is longer: plain precision product.
  CHECK(bleu(toks("a b c d e"), toks("a b c d")).value ==
        doctest::Approx(std::pow((4.0 / 5) * (3.0 / 4) * (2.0 / 3) * (1.0 / 2), 0.25))
            .epsilon(1e-12));
  CHECK(bleu(toks("a b c d e f g h"), toks("a b c d")).value <= 1.0);
}

TEST_CASE("bleu stays within [0, 1] and hits 1 only on equal token streams") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const TokenSequence cand = toks(random_sentence(rng, 1 + draw(rng, 10), 4));
    const TokenSequence ref = toks(random_sentence(rng, 1 + draw(rng, 10), 4));
    const double v = bleu(cand, ref).value;
    CAPTURE(cand.source_text);
    CAPTURE(ref.source_text);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    if (cand.tokens == ref.tokens) CHECK(v == 1.0);
    if (v == 1.0) CHECK(cand.tokens == ref.tokens);
  }
}

TEST_CASE("rouge_l matches the crossing-pair fixture") {
  // LCS("a b c d", "a c b d") = 3, P = R = 3/4, F1 = 0.75.
  CHECK(rouge_l(toks("a b c d"), toks("a c b d")).value == 0.75);
}

TEST_CASE("rouge_l boundary behavior") {
  CHECK(rouge_l(toks(""), toks("")).value == 1.0);
  CHECK(rouge_l(toks(""), toks("a")).value == 0.0);
  CHECK(rouge_l(toks("a"), toks("")).value == 0.0);
  CHECK(rouge_l(toks("x y"), toks("a b")).value == 0.0);
  CHECK(rouge_l(toks("a b c"), toks("a b c")).value == 1.0);
}

TEST_CASE("rouge_l agrees with the LCS oracle on random pairs") {
  std::mt19937_64 rng(123);
  for (int i = 0; i < 500; ++i) {
    const TokenSequence cand = toks(random_sentence(rng, 1 + draw(rng, 12), 5));
    const TokenSequence ref = toks(random_sentence(rng, 1 + draw(rng, 12), 5));
    const double lcs = double(dp_lcs_length(cand.tokens, ref.tokens));
    const double expected =
        lcs == 0.0 ? 0.0
                   : 2.0 * (lcs / cand.size()) * (lcs / ref.size()) /
                         (lcs / cand.size() + lcs / ref.size());
    CHECK(rouge_l(cand, ref).value == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("ter matches the block-shift fixture") {
  // Shifting "c d" to the front costs 1 and removes all word edits: 1/4.
  CHECK(ter(toks("c d a b"), toks("a b c d")).value == 0.25);
}

TEST_CASE("ter boundary behavior") {
  CHECK(ter(toks("a b c"), toks("a b c")).value == 0.0);
  CHECK(ter(toks(""), toks("a b")).value == 1.0);  // delete-everything edits / |ref|
  CHECK(ter(toks("a b"), toks("")).value == 2.0);  // convention: |hyp| when ref is empty
  CHECK(ter(toks(""), toks("")).value == 0.0);
  CHECK(ter(toks("x"), toks("a b c d")).value == 1.0);
}

TEST_CASE("ter never exceeds plain word edit rate") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const TokenSequence hyp = toks(random_sentence(rng, draw(rng, 14), 5));
    const TokenSequence ref = toks(random_sentence(rng, 1 + draw(rng, 14), 5));
    const double edit_rate =
        double(dp_edit_distance(hyp.tokens, ref.tokens)) / double(ref.size());
    CAPTURE(hyp.source_text);
    CAPTURE(ref.source_text);
    CHECK(ter(hyp, ref).value <= edit_rate + 1e-12);
    CHECK(ter(hyp, ref).value >= 0.0);
  }
}

TEST_CASE("ter greedy cost is bracketed by the exhaustive shift oracle") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 120; ++i) {
    const TokenSequence hyp = toks(random_sentence(rng, 1 + draw(rng, 7), 3));
    const TokenSequence ref = toks(random_sentence(rng, 1 + draw(rng, 7), 3));
    const double cost = ter(hyp, ref).value * double(ref.size());
    const double best = double(exhaustive_shift_edit_cost(hyp.tokens, ref.tokens, 2));
    const double plain = double(dp_edit_distance(hyp.tokens, ref.tokens));
    CAPTURE(hyp.source_text);
    CAPTURE(ref.source_text);
    CHECK(cost >= best - 1e-9);  // greedy cannot beat the optimum
    CHECK(cost <= plain + 1e-9);
    CHECK(std::abs(cost - std::round(cost)) < 1e-9);
  }
}

TEST_CASE("ter finds the whole-block swap") {
  // "e f g a b c d" vs "a b c d e f g": one shift of "e f g" suffices.
  CHECK(ter(toks("e f g a b c d"), toks("a b c d e f g")).value ==
        doctest::Approx(1.0 / 7.0).epsilon(1e-12));
}

}  // TEST_SUITE
