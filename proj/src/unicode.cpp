#include "lzdist/unicode.hpp"

#include <algorithm>
#include <cstdint>

#include "unicode_tables.hpp"

namespace lzdist {
namespace {

constexpr char32_t kReplacement = 0xFFFD;
constexpr char32_t kHangulSBase = 0xAC00, kHangulSEnd = 0xD7A3;
constexpr char32_t kHangulLBase = 0x1100, kHangulVBase = 0x1161, kHangulTBase = 0x11A7;
constexpr int kHangulVCount = 21, kHangulTCount = 28;

std::uint8_t ccc_of(char32_t c) {
  using detail::kCccEntries;
  const auto* end = kCccEntries + detail::kCccEntryCount;
  const auto* it = std::lower_bound(kCccEntries, end, c,
                                    [](const detail::CccEntry& e, char32_t v) { return e.cp < v; });
  return it != end && it->cp == c ? it->ccc : 0;
}

const detail::DecompEntry* find_decomp(char32_t c) {
  using detail::kDecompEntries;
  const auto* end = kDecompEntries + detail::kDecompEntryCount;
  const auto* it =
      std::lower_bound(kDecompEntries, end, c,
                       [](const detail::DecompEntry& e, char32_t v) { return e.cp < v; });
  return it != end && it->cp == c ? it : nullptr;
}

void hangul_decompose(char32_t c, std::vector<char32_t>& out) {
  const char32_t s = c - kHangulSBase;
  out.push_back(kHangulLBase + s / (kHangulVCount * kHangulTCount));
  out.push_back(kHangulVBase + (s % (kHangulVCount * kHangulTCount)) / kHangulTCount);
  const char32_t t = s % kHangulTCount;
  if (t != 0) out.push_back(kHangulTBase + t);
}

char32_t compose_pair(char32_t a, char32_t b) {
  if (a >= kHangulLBase && a <= 0x1112 && b >= kHangulVBase && b <= 0x1175)
    return kHangulSBase + ((a - kHangulLBase) * kHangulVCount + (b - kHangulVBase)) * kHangulTCount;
  if (a >= kHangulSBase && a <= kHangulSEnd && (a - kHangulSBase) % kHangulTCount == 0 &&
      b > kHangulTBase && b <= 0x11C2)
    return a + (b - kHangulTBase);

  const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
  using detail::kPairEntries;
  const auto* end = kPairEntries + detail::kPairEntryCount;
  const auto* it =
      std::lower_bound(kPairEntries, end, key,
                       [](const detail::PairEntry& e, std::uint64_t v) { return e.key < v; });
  return it != end && it->key == key ? it->composite : 0;
}

}  // namespace

std::vector<char32_t> utf8_decode(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const unsigned char b = static_cast<unsigned char>(text[i]);
    if (b < 0x80) {
      out.push_back(b);
      ++i;
      continue;
    }
    const int len = b > 0xF4 ? 0 : b >= 0xF0 ? 4 : b >= 0xE0 ? 3 : b >= 0xC0 ? 2 : 0;
    bool ok = len > 0 && i + len <= n;
    char32_t cp = ok ? (b & (0x7F >> len)) : 0;
    for (int k = 1; ok && k < len; ++k) {
      const unsigned char cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80)
        ok = false;
      else
        cp = (cp << 6) | (cont & 0x3F);
    }
    if (ok) {
      static constexpr char32_t kMinForLen[5] = {0, 0, 0x80, 0x800, 0x10000};
      if (cp < kMinForLen[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) ok = false;
    }
    if (ok) {
      out.push_back(cp);
      i += len;
    } else {
      out.push_back(kReplacement);  // one replacement per rejected byte
      ++i;
    }
  }
  return out;
}

std::string utf8_encode(const std::vector<char32_t>& scalars) {
  std::string out;
  out.reserve(scalars.size());
  for (char32_t c : scalars) {
    if (c < 0x80) {
      out.push_back(static_cast<char>(c));
    } else if (c < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (c >> 6)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else if (c < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (c >> 12)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (c >> 18)));
      out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
    }
  }
  return out;
}

std::string nfc_normalize(std::string_view utf8_text) {
  const std::vector<char32_t> scalars = utf8_decode(utf8_text);

  // Full canonical decomposition (table entries are already fully expanded).
  std::vector<char32_t> buf;
  buf.reserve(scalars.size());
  for (char32_t c : scalars) {
    if (c >= kHangulSBase && c <= kHangulSEnd) {
      hangul_decompose(c, buf);
    } else if (const auto* e = find_decomp(c)) {
      for (std::uint32_t k = 0; k < e->length; ++k)
        buf.push_back(detail::kDecompPool[e->offset + k]);
    } else {
      buf.push_back(c);
    }
  }

  // Canonical ordering: stable sort of each nonzero-ccc run.
  for (std::size_t i = 1; i < buf.size(); ++i) {
    const std::uint8_t cc = ccc_of(buf[i]);
    if (cc == 0) continue;
    std::size_t j = i;
    while (j > 0 && ccc_of(buf[j - 1]) > cc) {
      std::swap(buf[j - 1], buf[j]);
      --j;
    }
  }

  // Canonical composition: pair each character with the last starter unless
  // a character in between blocks it (ccc >= its own).
  std::vector<char32_t> out;
  out.reserve(buf.size());
  std::ptrdiff_t last_starter = -1;
  std::uint8_t prev_cc = 0;
  for (char32_t c : buf) {
    const std::uint8_t cc = ccc_of(c);
    if (last_starter >= 0 &&
        (out.size() == static_cast<std::size_t>(last_starter) + 1 || prev_cc < cc)) {
      if (const char32_t composite = compose_pair(out[last_starter], c)) {
        out[last_starter] = composite;
        continue;
      }
    }
    out.push_back(c);
    if (cc == 0) last_starter = static_cast<std::ptrdiff_t>(out.size()) - 1;
    prev_cc = cc;
  }
  return utf8_encode(out);
}

}  // namespace lzdist
