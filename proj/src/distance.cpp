#include "lzdist/distance.hpp"

#include <string>

#include "lzdist/error.hpp"
#include "lzdist/lz.hpp"
#include "lzdist/parallel.hpp"

namespace lzdist {
namespace {

void require_delimiter_free(const SymbolText& text, const char* which) {
  if (text.contains_delimiter())
    throw InvalidInputError(std::string(which) + " contains a reserved delimiter symbol");
}

// Factorizes the full concatenation once. No phrase can span a delimiter (the
// delimiters occur nowhere earlier, so no copy covers them), and the greedy
// parse is causal, so the phrases starting before prefix_len are exactly the
// parse of the prefix alone. The distance is the number of phrases at or
// beyond prefix_len.
DistanceResult distance_over(const SymbolText& concat, std::size_t prefix_len) {
  const LZFactorization fact = lz_factorize(concat);
  DistanceResult out;
  out.lz_concat = fact.count();
  std::size_t pos = 0;
  std::size_t tail_phrases = 0;
  for (const Phrase& p : fact.phrases) {
    if (pos >= prefix_len) ++tail_phrases;
    pos += p.length;
  }
  out.value = tail_phrases;
  out.lz_source = out.lz_concat - tail_phrases;
  return out;
}

}  // namespace

DistanceResult compression_distance(const SymbolText& source, const SymbolText& target) {
  require_delimiter_free(source, "source");
  require_delimiter_free(target, "target");

  SymbolText concat = source;
  concat.push_back(SymbolText::kPrimaryDelimiter);
  const std::size_t prefix_len = concat.size();
  concat.append(target);
  return distance_over(concat, prefix_len);
}

DistanceResult compression_distance_with_context(const SymbolText& context,
                                                 const SymbolText& source,
                                                 const SymbolText& target) {
  require_delimiter_free(context, "context");
  require_delimiter_free(source, "source");
  require_delimiter_free(target, "target");

  SymbolText concat = source;
  concat.push_back(SymbolText::kPrimaryDelimiter);
  concat.append(context);
  concat.push_back(SymbolText::kSecondaryDelimiter);
  const std::size_t prefix_len = concat.size();
  concat.append(target);
  return distance_over(concat, prefix_len);
}

std::vector<BatchRow> batch_distance(const std::vector<DistancePair>& pairs, DistanceMode mode,
                                     unsigned jobs) {
  std::vector<BatchRow> rows(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t i) {
    const DistancePair& pair = pairs[i];
    try {
      if (mode == DistanceMode::WithContext) {
        if (!pair.context)
          throw InvalidInputError("with_context mode requires a context text");
        rows[i].result = compression_distance_with_context(*pair.context, pair.source, pair.target);
      } else {
        rows[i].result = compression_distance(pair.source, pair.target);
      }
    } catch (const std::exception& e) {
      rows[i].error = e.what();
    }
  });
  return rows;
}

}  // namespace lzdist
