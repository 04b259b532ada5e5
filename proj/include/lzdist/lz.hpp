#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lzdist/symbol_text.hpp"

namespace lzdist {

// One factor of the greedy left-to-right LZ77 parse. A Copy refers to an
// occurrence starting strictly before its own position; the occurrence may
// overlap the phrase itself (source_start + length > start is allowed).
// A symbol with any earlier occurrence is emitted as a length-1 Copy, so
// Literal is reserved for first occurrences.
struct Phrase {
  enum class Kind : std::uint8_t { Literal, Copy };

  Kind kind;
  Symbol symbol = 0;            // Literal only
  std::size_t source_start = 0; // Copy only
  std::size_t length = 1;

  static Phrase literal(Symbol s) { return Phrase{Kind::Literal, s, 0, 1}; }
  static Phrase copy(std::size_t source, std::size_t len) {
    return Phrase{Kind::Copy, 0, source, len};
  }
  bool is_literal() const { return kind == Kind::Literal; }
};

struct LZFactorization {
  std::vector<Phrase> phrases;
  std::size_t total_length = 0;  // always equals the input length

  std::size_t count() const { return phrases.size(); }
};

// Greedy factorization: at each position emit the longest match that occurs
// earlier in the sequence, or a literal when the symbol is new. Runs in O(n)
// via suffix array + previous/next-smaller-value candidates.
LZFactorization lz_factorize(const SymbolText& text);

// Number of phrases of lz_factorize(text); count-only path, same parse.
std::size_t lz_phrase_count(const SymbolText& text);

// Rebuilds the input from its phrases (copies may self-overlap).
SymbolText lz_decode(const LZFactorization& factorization);

}  // namespace lzdist
