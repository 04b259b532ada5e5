#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "lzdist/symbol_text.hpp"

namespace lzdist::testing {

// Self-cleaning scratch directory for tests that touch the filesystem.
struct TempDir {
  std::filesystem::path path;

  TempDir() {
    static std::atomic<unsigned> counter{0};
    path = std::filesystem::temp_directory_path() /
           ("lzdist-test-" +
            std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()) + "-" +
            std::to_string(counter.fetch_add(1)));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

inline void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

inline std::string random_string(std::mt19937_64& rng, std::size_t length, unsigned alphabet) {
  std::string s;
  s.reserve(length);
  for (std::size_t i = 0; i < length; ++i)
    s.push_back(static_cast<char>('a' + draw(rng, alphabet)));
  return s;
}

inline SymbolText random_text(std::mt19937_64& rng, std::size_t length, unsigned alphabet) {
  return SymbolText::from_bytes(random_string(rng, length, alphabet));
}

}  // namespace lzdist::testing
