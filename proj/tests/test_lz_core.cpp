#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "lzdist/lz.hpp"
#include "lzdist/suffix_array.hpp"
#include "lzdist/symbol_text.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace lzdist;
using namespace lzdist::testing;

namespace {

void check_suffix_array_valid(const SymbolText& text, const SuffixArray& sa) {
  const std::size_t n = text.size();
  REQUIRE(sa.sa.size() == n);
  REQUIRE(sa.rank.size() == n);
  std::vector<bool> seen(n, false);
  for (std::int32_t p : sa.sa) {
    REQUIRE(p >= 0);
    REQUIRE(static_cast<std::size_t>(p) < n);
    REQUIRE(!seen[p]);
    seen[p] = true;
  }
  for (std::size_t k = 0; k < n; ++k) REQUIRE(sa.rank[sa.sa[k]] == static_cast<std::int32_t>(k));
  const auto& s = text.symbols();
  for (std::size_t k = 1; k < n; ++k) {
    const bool less = std::lexicographical_compare(s.begin() + sa.sa[k - 1], s.end(),
                                                   s.begin() + sa.sa[k], s.end());
    REQUIRE(less);
  }
}

// The library parse must match the oracle phrase-for-phrase in kind and
// length. Copy sources are not canonical (several occurrences can tie), so
// they are checked semantically: strictly earlier start and identical
// content, which lz_decode verifies via round-trip separately.
void check_same_parse(const LZFactorization& got, const LZFactorization& want) {
  REQUIRE(got.phrases.size() == want.phrases.size());
  for (std::size_t p = 0; p < got.phrases.size(); ++p) {
    CHECK(got.phrases[p].kind == want.phrases[p].kind);
    CHECK(got.phrases[p].length == want.phrases[p].length);
    if (got.phrases[p].is_literal()) CHECK(got.phrases[p].symbol == want.phrases[p].symbol);
  }
}

}  // namespace

TEST_SUITE("lz_core") {

TEST_CASE("symbol text validates its alphabet") {
  CHECK_THROWS_AS(SymbolText({1, 2, 300}), InvalidInputError);
  CHECK_THROWS_AS(SymbolText({SymbolText::kSecondaryDelimiter}, SymbolText::kByteBound),
                  InvalidInputError);

  SymbolText bytes = SymbolText::from_bytes("ab\xff");
  CHECK(bytes.alphabet_bound() == SymbolText::kByteBound);
  CHECK(bytes[2] == 255);
  CHECK(!bytes.contains_delimiter());
  CHECK(bytes.to_bytes() == "ab\xff");

  bytes.push_back(SymbolText::kPrimaryDelimiter);
  CHECK(bytes.alphabet_bound() == SymbolText::kAlphabetBound);
  CHECK(bytes.contains_delimiter());
  CHECK_THROWS_AS(bytes.to_bytes(), InvalidInputError);
  CHECK_THROWS_AS(bytes.push_back(SymbolText::kAlphabetBound), InvalidInputError);
}

TEST_CASE("suffix array fixed examples") {
  CHECK(build_suffix_array(SymbolText::from_bytes("")).sa.empty());

  auto banana = build_suffix_array(SymbolText::from_bytes("banana"));
  CHECK(banana.sa == std::vector<std::int32_t>{5, 3, 1, 0, 4, 2});

  auto aaa = build_suffix_array(SymbolText::from_bytes("aaa"));
  CHECK(aaa.sa == std::vector<std::int32_t>{2, 1, 0});

  auto single = build_suffix_array(SymbolText::from_bytes("z"));
  CHECK(single.sa == std::vector<std::int32_t>{0});
}

TEST_CASE("suffix array matches naive sort on random strings") {
  std::mt19937_64 rng(20240901);
  for (int round = 0; round < 300; ++round) {
    const unsigned alphabet = round % 3 == 0 ? 2 : round % 3 == 1 ? 4 : 26;
    const std::size_t len = 1 + draw(rng, 512);
    SymbolText text = random_text(rng, len, alphabet);
    SuffixArray sa = build_suffix_array(text);
    check_suffix_array_valid(text, sa);
    CHECK(sa.sa == naive_suffix_array(text));
  }
}

TEST_CASE("suffix array handles delimiter symbols") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    SymbolText text = random_text(rng, 1 + draw(rng, 100), 3);
    text.push_back(SymbolText::kPrimaryDelimiter);
    text.append(random_text(rng, 1 + draw(rng, 100), 3));
    text.push_back(SymbolText::kSecondaryDelimiter);
    text.append(random_text(rng, 1 + draw(rng, 100), 3));
    SuffixArray sa = build_suffix_array(text);
    check_suffix_array_valid(text, sa);
    CHECK(sa.sa == naive_suffix_array(text));
  }
}

TEST_CASE("factorization fixed examples") {
  CHECK(lz_factorize(SymbolText::from_bytes("")).count() == 0);
  CHECK(lz_phrase_count(SymbolText::from_bytes("")) == 0);

  auto ababab = lz_factorize(SymbolText::from_bytes("ababab"));
  REQUIRE(ababab.count() == 3);
  CHECK(ababab.phrases[0].is_literal());
  CHECK(ababab.phrases[0].symbol == 'a');
  CHECK(ababab.phrases[1].is_literal());
  CHECK(ababab.phrases[1].symbol == 'b');
  CHECK(!ababab.phrases[2].is_literal());
  CHECK(ababab.phrases[2].source_start == 0);
  CHECK(ababab.phrases[2].length == 4);  // overlapping copy

  // a | b | r | a | c | a | d | abra
  auto abracadabra = lz_factorize(SymbolText::from_bytes("abracadabra"));
  REQUIRE(abracadabra.count() == 8);
  CHECK(abracadabra.phrases[7].length == 4);

  auto aaaa = lz_factorize(SymbolText::from_bytes("aaaa"));
  REQUIRE(aaaa.count() == 2);
  CHECK(aaaa.phrases[1].length == 3);
  CHECK(lz_phrase_count(SymbolText::from_bytes("aaaa")) == 2);

  CHECK(lz_phrase_count(SymbolText::from_bytes("abcd")) == 4);
}

TEST_CASE("length-1 repeats become copies, not literals") {
  auto aa = lz_factorize(SymbolText::from_bytes("aa"));
  REQUIRE(aa.count() == 2);
  CHECK(aa.phrases[0].is_literal());
  CHECK(!aa.phrases[1].is_literal());
  CHECK(aa.phrases[1].length == 1);
  CHECK(aa.phrases[1].source_start == 0);
}

TEST_CASE("factorization matches naive oracle on random strings") {
  std::mt19937_64 rng(20240902);
  for (int round = 0; round < 1000; ++round) {
    const unsigned alphabet = round % 3 == 0 ? 2 : round % 3 == 1 ? 4 : 26;
    const std::size_t len = 1 + draw(rng, 512);
    SymbolText text = random_text(rng, len, alphabet);

    LZFactorization fast = lz_factorize(text);
    check_same_parse(fast, naive_lz_factorize(text));
    CHECK(lz_phrase_count(text) == fast.count());

    // Copy sources must be strictly earlier and reproduce the input.
    std::size_t pos = 0;
    for (const Phrase& p : fast.phrases) {
      if (!p.is_literal()) REQUIRE(p.source_start < pos);
      pos += p.length;
    }
    REQUIRE(pos == text.size());
    CHECK(lz_decode(fast) == text);
  }
}

TEST_CASE("decode validates phrase structure") {
  LZFactorization bad;
  bad.total_length = 2;
  bad.phrases.push_back(Phrase::literal('a'));
  bad.phrases.push_back(Phrase::copy(1, 1));  // source not strictly earlier
  CHECK_THROWS_AS(lz_decode(bad), ValidationError);

  LZFactorization short_total;
  short_total.total_length = 3;
  short_total.phrases.push_back(Phrase::literal('a'));
  CHECK_THROWS_AS(lz_decode(short_total), ValidationError);
}

TEST_CASE("prepending a dictionary never lengthens the suffix parse") {
  std::mt19937_64 rng(20240903);
  for (int round = 0; round < 1000; ++round) {
    SymbolText prefix = random_text(rng, 1 + draw(rng, 128), 4);
    SymbolText x = random_text(rng, 1 + draw(rng, 128), 4);

    SymbolText concat = prefix;
    concat.push_back(SymbolText::kPrimaryDelimiter);
    const std::size_t boundary = concat.size();
    concat.append(x);

    std::size_t tail = 0, pos = 0;
    for (const Phrase& p : lz_factorize(concat).phrases) {
      if (pos >= boundary) ++tail;
      pos += p.length;
    }
    CHECK(tail <= lz_phrase_count(x));
  }
}

}  // TEST_SUITE
