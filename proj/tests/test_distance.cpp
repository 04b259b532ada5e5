#include <random>

#include "doctest.h"
#include "lzdist/distance.hpp"
#include "lzdist/lz.hpp"
#include "oracles.hpp"
#include "testutil.hpp"

using namespace lzdist;
using namespace lzdist::testing;

namespace {

// Definition-level reference: factorize the two concatenations separately
// with the naive parser and subtract the phrase counts.
std::size_t naive_distance(const SymbolText& source, const SymbolText& target) {
  SymbolText prefix = source;
  prefix.push_back(SymbolText::kPrimaryDelimiter);
  SymbolText concat = prefix;
  concat.append(target);
  return naive_lz_factorize(concat).count() - naive_lz_factorize(prefix).count();
}

}  // namespace

TEST_SUITE("distance") {

TEST_CASE("fixed examples") {
  auto empty_source = compression_distance(SymbolText::from_bytes(""), SymbolText::from_bytes("ababab"));
  CHECK(empty_source.value == 3);

  auto ab = compression_distance(SymbolText::from_bytes("ab"), SymbolText::from_bytes("abab"));
  CHECK(ab.value == 2);
  CHECK(ab.lz_source == 3);
  CHECK(ab.lz_concat == 5);

  auto ctx = compression_distance_with_context(
      SymbolText::from_bytes("xyz"), SymbolText::from_bytes("ab"), SymbolText::from_bytes("abxyz"));
  CHECK(ctx.value == 2);
  CHECK(ctx.lz_source == 7);
  CHECK(ctx.lz_concat == 9);
}

TEST_CASE("identities on random inputs") {
  std::mt19937_64 rng(20240910);
  for (int round = 0; round < 100; ++round) {
    SymbolText s = random_text(rng, 1 + draw(rng, 200), 4);
    SymbolText t = random_text(rng, 1 + draw(rng, 200), 4);

    CHECK(compression_distance(s, s).value == 1);
    CHECK(compression_distance(s, SymbolText::from_bytes("")).value == 0);
    CHECK(compression_distance(SymbolText::from_bytes(""), t).value == lz_phrase_count(t));

    auto d = compression_distance(s, t);
    CHECK(d.lz_concat == d.lz_source + d.value);
  }
}

TEST_CASE("matches two-factorization reference") {
  std::mt19937_64 rng(20240911);
  for (int round = 0; round < 200; ++round) {
    SymbolText s = random_text(rng, draw(rng, 64), 3);
    SymbolText t = random_text(rng, draw(rng, 64), 3);
    CHECK(compression_distance(s, t).value == naive_distance(s, t));
  }
}

TEST_CASE("empty context reduces to the plain distance") {
  std::mt19937_64 rng(20240912);
  for (int round = 0; round < 50; ++round) {
    SymbolText s = random_text(rng, 1 + draw(rng, 100), 4);
    SymbolText t = random_text(rng, 1 + draw(rng, 100), 4);
    auto plain = compression_distance(s, t);
    auto ctx = compression_distance_with_context(SymbolText::from_bytes(""), s, t);
    CHECK(ctx.value == plain.value);
  }
}

TEST_CASE("verbatim copy of the context costs one phrase") {
  std::mt19937_64 rng(20240913);
  for (int round = 0; round < 50; ++round) {
    // Disjoint alphabets keep the knowledge from occurring inside the source.
    SymbolText s = random_text(rng, 1 + draw(rng, 100), 4);
    std::string k;
    for (std::size_t i = 0, n = 1 + draw(rng, 100); i < n; ++i)
      k.push_back(static_cast<char>('p' + draw(rng, 4)));
    auto r = compression_distance_with_context(SymbolText::from_bytes(k), s,
                                               SymbolText::from_bytes(k));
    CHECK(r.value == 1);
  }
}

TEST_CASE("context never increases the distance") {
  std::mt19937_64 rng(20240914);
  for (int round = 0; round < 1000; ++round) {
    SymbolText k = random_text(rng, draw(rng, 96), 4);
    SymbolText s = random_text(rng, 1 + draw(rng, 96), 4);
    SymbolText t = random_text(rng, 1 + draw(rng, 96), 4);
    CHECK(compression_distance_with_context(k, s, t).value <= compression_distance(s, t).value);
  }
}

TEST_CASE("asymmetric by design") {
  SymbolText s = SymbolText::from_bytes("abcabcabc");
  SymbolText t = SymbolText::from_bytes("abc");
  CHECK(compression_distance(s, t).value == 1);
  CHECK(compression_distance(t, s).value == 2);
}

TEST_CASE("swapping halves costs at most two phrases") {
  std::mt19937_64 rng(20240915);
  for (std::size_t len : {64u, 256u, 1024u, 4096u}) {
    std::string s = random_string(rng, len, 26);
    std::string swapped = s.substr(len / 2) + s.substr(0, len / 2);
    auto d = compression_distance(SymbolText::from_bytes(s), SymbolText::from_bytes(swapped));
    CHECK(d.value <= 2);
  }
}

TEST_CASE("delimiters are rejected in inputs") {
  SymbolText with_delim({'a', SymbolText::kPrimaryDelimiter});
  SymbolText plain = SymbolText::from_bytes("ab");
  CHECK_THROWS_AS(compression_distance(with_delim, plain), InvalidInputError);
  CHECK_THROWS_AS(compression_distance(plain, with_delim), InvalidInputError);
  CHECK_THROWS_AS(compression_distance_with_context(with_delim, plain, plain), InvalidInputError);
}

TEST_CASE("batch mirrors single calls and fails per row") {
  CHECK(batch_distance({}, DistanceMode::Plain).empty());

  std::mt19937_64 rng(20240916);
  std::vector<DistancePair> pairs;
  for (int i = 0; i < 100; ++i) {
    DistancePair p;
    p.source = random_text(rng, 1 + draw(rng, 120), 4);
    p.target = random_text(rng, 1 + draw(rng, 120), 4);
    if (i % 2 == 0) p.context = random_text(rng, 1 + draw(rng, 120), 4);
    pairs.push_back(std::move(p));
  }

  auto serial = batch_distance(pairs, DistanceMode::Plain, 1);
  auto threaded = batch_distance(pairs, DistanceMode::Plain, 4);
  REQUIRE(serial.size() == pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    REQUIRE(serial[i].ok());
    REQUIRE(threaded[i].ok());
    auto direct = compression_distance(pairs[i].source, pairs[i].target);
    CHECK(serial[i].result->value == direct.value);
    CHECK(threaded[i].result->value == direct.value);
    CHECK(threaded[i].result->lz_concat == direct.lz_concat);
  }

  // WithContext: odd rows lack a context and must fail alone.
  auto ctx_rows = batch_distance(pairs, DistanceMode::WithContext, 4);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i % 2 == 0) {
      REQUIRE(ctx_rows[i].ok());
      auto direct =
          compression_distance_with_context(*pairs[i].context, pairs[i].source, pairs[i].target);
      CHECK(ctx_rows[i].result->value == direct.value);
    } else {
      CHECK(!ctx_rows[i].ok());
      CHECK(!ctx_rows[i].error.empty());
    }
  }
}

}  // TEST_SUITE
