#pragma once

#include <cstdint>
#include <random>

namespace igusa {

// Deterministic RNG for fixtures: mt19937_64 output is pinned by the
// standard, and we avoid std::uniform_int_distribution (whose sequence is
// implementation-defined) so byte-identical runs hold across toolchains.
struct DetRng {
  std::mt19937_64 eng;

  explicit DetRng(uint64_t seed) : eng(seed) {}

  uint64_t raw() { return eng(); }
  long below(long n) { return static_cast<long>(raw() % static_cast<uint64_t>(n)); }
  long range(long lo, long hi) { return lo + below(hi - lo + 1); }

  /// nonzero draw
  long nonzero(long lo, long hi) {
    long v = range(lo, hi);
    while (v == 0) v = range(lo, hi);
    return v;
  }
};

}  // namespace igusa
