#pragma once

// Internal lookup tables for NFC normalization, generated from the Unicode
// character database by tools/gen_unicode_tables.py. All tables are sorted
// by code point (or packed pair key) for binary search.

#include <cstddef>
#include <cstdint>

namespace lzdist::detail {

struct DecompEntry {
  char32_t cp;
  std::uint32_t offset;  // into kDecompPool
  std::uint32_t length;
};

struct CccEntry {
  char32_t cp;
  std::uint8_t ccc;
};

struct PairEntry {
  std::uint64_t key;  // (starter << 32) | combining
  char32_t composite;
};

extern const char32_t kDecompPool[];
extern const DecompEntry kDecompEntries[];
extern const std::size_t kDecompEntryCount;

extern const CccEntry kCccEntries[];
extern const std::size_t kCccEntryCount;

extern const PairEntry kPairEntries[];
extern const std::size_t kPairEntryCount;

}  // namespace lzdist::detail
