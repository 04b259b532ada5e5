#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lzdist {

// Decodes UTF-8 into scalar values; every invalid byte becomes U+FFFD.
std::vector<char32_t> utf8_decode(std::string_view text);

std::string utf8_encode(const std::vector<char32_t>& scalars);

// Canonical composition (NFC): full canonical decomposition, canonical
// reordering by combining class, then pairwise recomposition including the
// algorithmic Hangul cases. Tables are generated from the Unicode character
// database (see tools/gen_unicode_tables.py).
std::string nfc_normalize(std::string_view utf8_text);

}  // namespace lzdist
