#!/usr/bin/env python3
"""Regenerates src/unicode_tables.cpp from Python's unicodedata.

Emits three sorted tables:
  - full canonical decompositions (NFD output per scalar, Hangul excluded:
    those are derived algorithmically at runtime),
  - nonzero canonical combining classes,
  - primary composite pairs (immediate two-element canonical decompositions
    that NFC actually recomposes, which filters the composition exclusions).

Run from the repository root:  python3 tools/gen_unicode_tables.py
"""

import sys
import unicodedata

HANGUL_BASE = 0xAC00
HANGUL_END = 0xD7A3


def scalars():
    for cp in range(0x110000):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        yield cp


def main():
    decomp = {}
    ccc = {}
    pairs = {}

    for cp in scalars():
        ch = chr(cp)
        cc = unicodedata.combining(ch)
        if cc:
            ccc[cp] = cc
        if HANGUL_BASE <= cp <= HANGUL_END:
            continue
        nfd = unicodedata.normalize("NFD", ch)
        if nfd != ch:
            decomp[cp] = [ord(c) for c in nfd]
        raw = unicodedata.decomposition(ch)
        if raw and not raw.startswith("<"):
            parts = [int(p, 16) for p in raw.split()]
            if len(parts) == 2 and unicodedata.normalize("NFC", "".join(map(chr, parts))) == ch:
                pairs[(parts[0], parts[1])] = cp

    pool = []
    decomp_entries = []
    for cp in sorted(decomp):
        seq = decomp[cp]
        decomp_entries.append((cp, len(pool), len(seq)))
        pool.extend(seq)

    out = sys.stdout
    out.write("// Generated by tools/gen_unicode_tables.py (unicodedata %s). Do not edit.\n"
              % unicodedata.unidata_version)
    out.write('#include "unicode_tables.hpp"\n\n')
    out.write("namespace lzdist::detail {\n\n")

    out.write("const char32_t kDecompPool[] = {\n")
    for i in range(0, len(pool), 12):
        out.write("    " + ", ".join("0x%X" % v for v in pool[i:i + 12]) + ",\n")
    out.write("};\n\n")

    out.write("const DecompEntry kDecompEntries[] = {\n")
    for cp, off, length in decomp_entries:
        out.write("    {0x%X, %d, %d},\n" % (cp, off, length))
    out.write("};\n")
    out.write("const std::size_t kDecompEntryCount = %d;\n\n" % len(decomp_entries))

    out.write("const CccEntry kCccEntries[] = {\n")
    for cp in sorted(ccc):
        out.write("    {0x%X, %d},\n" % (cp, ccc[cp]))
    out.write("};\n")
    out.write("const std::size_t kCccEntryCount = %d;\n\n" % len(ccc))

    out.write("const PairEntry kPairEntries[] = {\n")
    for (a, b) in sorted(pairs):
        key = (a << 32) | b
        out.write("    {0x%XULL, 0x%X},\n" % (key, pairs[(a, b)]))
    out.write("};\n")
    out.write("const std::size_t kPairEntryCount = %d;\n\n" % len(pairs))

    out.write("}  // namespace lzdist::detail\n")


if __name__ == "__main__":
    main()
