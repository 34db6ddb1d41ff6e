#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <string_view>

namespace fairtest {

// 64-bit FNV-1a. Stable across platforms and runs; used for request
// fingerprints, per-pair seeds and artifact checksums.
std::uint64_t fnv1a64(std::string_view data,
                      std::uint64_t basis = 0xcbf29ce484222325ULL);

// Fixed-width lowercase hex (16 chars).
std::string to_hex(std::uint64_t value);

// Order-sensitive combination of several fields into one seed. Fields are
// length-prefixed so ("ab","c") and ("a","bc") differ.
std::uint64_t derive_seed(std::initializer_list<std::string_view> parts);

// Deterministic engine with a portable bounded draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace fairtest
