#include <string>
#include <vector>

#include "doctest.h"
#include "lzdist/unicode.hpp"

using namespace lzdist;

// Expected values in this file were produced with Python's unicodedata
// (UCD 13.0.0): unicodedata.normalize("NFC", s).

TEST_SUITE("unicode") {

TEST_CASE("utf8 round-trips valid text") {
  for (const std::string s : {std::string("plain ascii"), std::string("caf\xc3\xa9"),
                              std::string("\xea\xb0\x81"), std::string("\xf0\x9f\x98\x80"),
                              std::string("")}) {
    CHECK(utf8_encode(utf8_decode(s)) == s);
  }
}

TEST_CASE("utf8 decoding replaces invalid bytes one for one") {
  CHECK(utf8_decode("\xff") == std::vector<char32_t>{0xFFFD});
  CHECK(utf8_decode("\x80") == std::vector<char32_t>{0xFFFD});
  CHECK(utf8_decode("a\xc3") == std::vector<char32_t>{'a', 0xFFFD});
  // Truncated three-byte sequence: lead byte becomes U+FFFD, then 'b' resumes.
  CHECK(utf8_decode("\xe2\x84"
                    "b") == std::vector<char32_t>{0xFFFD, 0xFFFD, 'b'});
  // Overlong encoding of '/' is rejected byte by byte.
  CHECK(utf8_decode("\xc0\xaf") == std::vector<char32_t>{0xFFFD, 0xFFFD});
  // Surrogate halves are not scalars.
  CHECK(utf8_decode("\xed\xa0\x80") == std::vector<char32_t>{0xFFFD, 0xFFFD, 0xFFFD});
  // Above U+10FFFF.
  CHECK(utf8_decode("\xf5\x80\x80\x80")[0] == 0xFFFD);
}

TEST_CASE("nfc composes the classic pairs") {
  CHECK(nfc_normalize("e\xcc\x81") == "\xc3\xa9");                    // e + acute -> U+00E9
  CHECK(nfc_normalize("\xce\xb1\xcc\x81") == "\xce\xac");             // alpha + acute
  CHECK(nfc_normalize("\xe2\x84\xab") == "\xc3\x85");                 // angstrom sign -> A-ring
  CHECK(nfc_normalize("A\xcc\x8a") == "\xc3\x85");                    // A + ring
  CHECK(nfc_normalize("\xc3\xa9") == "\xc3\xa9");                     // already composed
  CHECK(nfc_normalize("plain ascii 123") == "plain ascii 123");
  CHECK(nfc_normalize("") == "");
}

TEST_CASE("nfc composes Hangul syllables algorithmically") {
  // U+1100 U+1161 U+11A8 -> U+AC01, and LV-only -> U+AC00.
  CHECK(nfc_normalize("\xe1\x84\x80\xe1\x85\xa1\xe1\x86\xa8") == "\xea\xb0\x81");
  CHECK(nfc_normalize("\xe1\x84\x80\xe1\x85\xa1") == "\xea\xb0\x80");
  // A precomposed LV syllable picks up a trailing jamo.
  CHECK(nfc_normalize("\xea\xb0\x80\xe1\x86\xa8") == "\xea\xb0\x81");
}

TEST_CASE("nfc honors composition exclusions") {
  // U+0915 U+093C would compose to U+0958, but that pair is excluded, and
  // the precomposed character decomposes and stays decomposed.
  CHECK(nfc_normalize("\xe0\xa4\x95\xe0\xa4\xbc") == "\xe0\xa4\x95\xe0\xa4\xbc");
  CHECK(nfc_normalize("\xe0\xa5\x98") == "\xe0\xa4\x95\xe0\xa4\xbc");
}

TEST_CASE("nfc applies canonical reordering before composing") {
  // dot-above (ccc 230) written before dot-below (ccc 220) must swap.
  CHECK(nfc_normalize("q\xcc\x87\xcc\xa3") == "q\xcc\xa3\xcc\x87");
  // e + acute + cedilla composes with the cedilla (ccc 202) sorted first.
  CHECK(nfc_normalize("e\xcc\x81\xcc\xa7") == "\xc8\xa9\xcc\x81");
  CHECK(nfc_normalize("e\xcc\xa7\xcc\x81") == "\xc8\xa9\xcc\x81");
}

TEST_CASE("nfc matches the reference implementation on a frozen corpus") {
  const std::vector<std::pair<std::string, std::string>> corpus = {
      {"\xe0\xa5\x98\xe1\x85\xa1\xe4\xb8\xad\xea\xb0\x80\x20\xc3\xa9\xce\xb1\xe0\xa5\x98",
       "\xe0\xa4\x95\xe0\xa4\xbc\xe1\x85\xa1\xe4\xb8\xad\xea\xb0\x80\x20\xc3\xa9\xce\xb1\xe0\xa4"
       "\x95\xe0\xa4\xbc"},
      {"\xcc\x81\xe2\x84\xab\x71\x61\xe4\xb8\xad\x5a\xe3\x81\xb1\xe3\x82\x9a\xcc\x81\xe1\x85\xa1"
       "\xcc\x88\xcc\xa7",
       "\xcc\x81\xc3\x85\x71\x61\xe4\xb8\xad\x5a\xe3\x81\xb1\xe3\x82\x9a\xcc\x81\xe1\x85\xa1\xcc"
       "\xa7\xcc\x88"},
      {"\x61", "\x61"},
      {"\xcc\xa3\xe0\xb5\x8d\xe1\x86\xa8\xcc\xa7\x71\xe0\xa5\x98\xe1\x84\x80\xcc\xa3\xc3\xa9\x61",
       "\xe0\xb5\x8d\xcc\xa3\xe1\x86\xa8\xcc\xa7\x71\xe0\xa4\x95\xe0\xa4\xbc\xe1\x84\x80\xcc\xa3"
       "\xc3\xa9\x61"},
      {"\xe3\x82\x9a\xe4\xb8\xad", "\xe3\x82\x9a\xe4\xb8\xad"},
      {"\xcc\x88\xe1\x85\xa1\xe1\x86\xa8\xcc\x88\xe0\xa5\x98",
       "\xcc\x88\xe1\x85\xa1\xe1\x86\xa8\xcc\x88\xe0\xa4\x95\xe0\xa4\xbc"},
      {"\xea\xb0\x80\xcc\xa7\x20\xcc\xa7\xe2\x84\xab\xe1\xb8\x8b\xea\xb0\x80\x71\xe0\xa4\x95\xcc"
       "\x87\xc3\x85",
       "\xea\xb0\x80\xcc\xa7\x20\xcc\xa7\xc3\x85\xe1\xb8\x8b\xea\xb0\x80\x71\xe0\xa4\x95\xcc\x87"
       "\xc3\x85"},
      {"\xe3\x81\xaf\xc3\x85\xe0\xa4\x95\xcc\x87\xe3\x82\x9b\xe1\x85\xa1\xe1\x86\xa8\x61\x71",
       "\xe3\x81\xaf\xc3\x85\xe0\xa4\x95\xcc\x87\xe3\x82\x9b\xe1\x85\xa1\xe1\x86\xa8\x61\x71"},
      {"\xcc\x87\xe1\x85\xa1\x61\xe3\x81\xb1\xe1\xb8\x8b\xe0\xb5\x8d",
       "\xcc\x87\xe1\x85\xa1\x61\xe3\x81\xb1\xe1\xb8\x8b\xe0\xb5\x8d"},
      {"\xc3\x85\xe1\x85\xa1\xe1\xb8\x8b\xe3\x82\x9a\xc3\x85\xd7\x90\xe3\x81\xaf\xe3\x81\xaf\xe0"
       "\xa4\x95\xce\xb1\xc3\xa9\xcc\x88",
       "\xc3\x85\xe1\x85\xa1\xe1\xb8\x8b\xe3\x82\x9a\xc3\x85\xd7\x90\xe3\x81\xaf\xe3\x81\xaf\xe0"
       "\xa4\x95\xce\xb1\xc3\xa9\xcc\x88"},
      {"\xe1\x86\xa8\xe1\xb8\x8b\xe1\xb8\x8b\xcc\x81\xe3\x81\xb1\xe0\xa5\x98\xe3\x81\xb1",
       "\xe1\x86\xa8\xe1\xb8\x8b\xe1\xb8\x8b\xcc\x81\xe3\x81\xb1\xe0\xa4\x95\xe0\xa4\xbc\xe3\x81"
       "\xb1"},
      {"\xe0\xa4\xbc\xc3\xa9\x5a\xc3\x85\xe3\x81\xaf\xed\x9e\xa3\x71\xe4\xb8\xad\x65\xe0\xa4\x95",
       "\xe0\xa4\xbc\xc3\xa9\x5a\xc3\x85\xe3\x81\xaf\xed\x9e\xa3\x71\xe4\xb8\xad\x65\xe0\xa4\x95"},
      {"\xe1\x84\x80\xe1\x85\xa1\xe3\x82\x9a", "\xea\xb0\x80\xe3\x82\x9a"},
      {"\xed\x9e\xa3\xcc\xa3\xe3\x82\x9a\xe0\xa4\x95\xc3\x85",
       "\xed\x9e\xa3\xe3\x82\x9a\xcc\xa3\xe0\xa4\x95\xc3\x85"},
  };
  for (const auto& [input, expected] : corpus) {
    CAPTURE(input);
    CHECK(nfc_normalize(input) == expected);
  }
}

TEST_CASE("nfc handles a long mixed sentence") {
  const std::string input =
      "Stra\xc3\x9f"
      "e gar\xc3\xa7on nai\xcc\x88ve \xed\x95\x9c\xea\xb8\x80 "
      "\xe2\x84\xab\xe0\xa4\xb6\xe0\xa5\x8d\xe0\xa4\xb0\xe0\xa5\x80";
  const std::string expected =
      "Stra\xc3\x9f"
      "e gar\xc3\xa7on na\xc3\xafve \xed\x95\x9c\xea\xb8\x80 "
      "\xc3\x85\xe0\xa4\xb6\xe0\xa5\x8d\xe0\xa4\xb0\xe0\xa5\x80";
  CHECK(nfc_normalize(input) == expected);
}

TEST_CASE("nfc is idempotent") {
  const std::vector<std::string> inputs = {
      "e\xcc\x81",
      "\xe1\x84\x80\xe1\x85\xa1\xe1\x86\xa8",
      "q\xcc\x87\xcc\xa3",
      "\xe0\xa5\x98",
      "\xe2\x84\xab\xe2\x84\xab\xe2\x84\xab",
      "mixed e\xcc\x81 text \xea\xb0\x81",
  };
  for (const std::string& s : inputs) {
    const std::string once = nfc_normalize(s);
    CHECK(nfc_normalize(once) == once);
  }
}

TEST_CASE("nfc passes invalid UTF-8 through as replacement characters") {
  // The decoder maps each bad byte to U+FFFD; normalization then keeps it.
  CHECK(nfc_normalize("a\xffz") == "a\xef\xbf\xbdz");
}

}  // TEST_SUITE
