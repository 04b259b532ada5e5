#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lzdist/symbol_text.hpp"

namespace lzdist {

struct DistancePair {
  SymbolText source;
  SymbolText target;
  std::optional<SymbolText> context;
};

struct DistanceResult {
  std::size_t value = 0;      // lz_concat - lz_source, always >= 0
  std::size_t lz_source = 0;  // phrases of the dictionary prefix (delimiters included)
  std::size_t lz_concat = 0;  // phrases of the full concatenation
};

enum class DistanceMode { Plain, WithContext };

// Phrase cost of parsing T once S is available as a dictionary:
//   value = LZ(S · d · T) - LZ(S · d)
// with d the reserved delimiter symbol. Subtracting LZ(S · d) rather than
// LZ(S) cancels the delimiter's own phrase, so distance(S, "") == 0 exactly.
// Inputs must not contain delimiter symbols.
DistanceResult compression_distance(const SymbolText& source, const SymbolText& target);

// Same cost with an extra knowledge text in the dictionary:
//   value = LZ(S · d1 · K · d2 · T) - LZ(S · d1 · K · d2)
// Substrings of the knowledge text then cost one phrase each to reuse.
DistanceResult compression_distance_with_context(const SymbolText& context,
                                                 const SymbolText& source,
                                                 const SymbolText& target);

// One batch row: either a result or the error that row produced.
struct BatchRow {
  std::optional<DistanceResult> result;
  std::string error;  // empty on success

  bool ok() const { return result.has_value(); }
};

// Applies the selected distance to every pair. Rows fail independently (a
// missing context in WithContext mode fails that row only). Results are in
// input order and identical whatever the worker count.
std::vector<BatchRow> batch_distance(const std::vector<DistancePair>& pairs, DistanceMode mode,
                                     unsigned jobs = 1);

}  // namespace lzdist
