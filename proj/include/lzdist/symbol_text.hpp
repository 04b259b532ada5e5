#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lzdist/error.hpp"

namespace lzdist {

using Symbol = std::uint32_t;

// A text as a sequence of integer symbols. Bytes occupy 0..255; values 256
// and 257 are reserved for the concatenation delimiters, which keeps them
// out of band of any decoded input byte, so no escaping is ever needed.
class SymbolText {
 public:
  static constexpr Symbol kByteBound = 256;
  static constexpr Symbol kPrimaryDelimiter = 256;
  static constexpr Symbol kSecondaryDelimiter = 257;
  static constexpr Symbol kAlphabetBound = 258;

  SymbolText() = default;

  explicit SymbolText(std::vector<Symbol> symbols, Symbol alphabet_bound = kAlphabetBound)
      : symbols_(std::move(symbols)), alphabet_bound_(alphabet_bound) {
    for (Symbol s : symbols_) {
      if (s >= alphabet_bound_)
        throw InvalidInputError("symbol " + std::to_string(s) + " exceeds alphabet bound " +
                                std::to_string(alphabet_bound_));
    }
  }

  // Interprets the string as raw bytes (UTF-8 or otherwise); no decoding.
  static SymbolText from_bytes(std::string_view text) {
    SymbolText out;
    out.symbols_.reserve(text.size());
    for (unsigned char c : text) out.symbols_.push_back(static_cast<Symbol>(c));
    out.alphabet_bound_ = kByteBound;
    return out;
  }

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Symbol alphabet_bound() const { return alphabet_bound_; }

  bool contains_delimiter() const {
    for (Symbol s : symbols_)
      if (s >= kByteBound) return true;
    return false;
  }

  void push_back(Symbol s) {
    if (s >= kAlphabetBound)
      throw InvalidInputError("symbol " + std::to_string(s) + " exceeds alphabet bound");
    symbols_.push_back(s);
    if (s >= alphabet_bound_) alphabet_bound_ = kAlphabetBound;
  }

  void append(const SymbolText& other) {
    symbols_.insert(symbols_.end(), other.symbols_.begin(), other.symbols_.end());
    if (other.alphabet_bound_ > alphabet_bound_) alphabet_bound_ = other.alphabet_bound_;
  }

  // Inverse of from_bytes; delimiter symbols cannot be represented as bytes.
  std::string to_bytes() const {
    std::string out;
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) {
      if (s >= kByteBound) throw InvalidInputError("delimiter symbol has no byte representation");
      out.push_back(static_cast<char>(static_cast<unsigned char>(s)));
    }
    return out;
  }

  bool operator==(const SymbolText& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<Symbol> symbols_;
  Symbol alphabet_bound_ = kAlphabetBound;
};

}  // namespace lzdist
