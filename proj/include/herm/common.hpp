#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace herm {

// Canonical index of a field element, in [0, q).
using Fe = std::uint16_t;

// Caller violated a documented precondition (bad input, mismatched fields).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Request is outside the built-in registry or the supported parameter range.
struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seeded 64-bit generator: std::mt19937_64 with splitmix64-derived substream
// seeds. Raw engine outputs only (no std distributions), so every draw is
// bit-reproducible across platforms and shard layouts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(splitmix64(seed ^ splitmix64(index + 1)));
  }

  std::uint64_t next() { return gen_(); }

  // Unbiased uniform draw from [0, n) by masked rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw UsageError("Rng::below: empty range");
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    for (;;) {
      std::uint64_t v = gen_() & mask;
      if (v < n) return v;
    }
  }

 private:
  std::mt19937_64 gen_;
};

inline constexpr const char* kToolName = "hermtool";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

}  // namespace herm
