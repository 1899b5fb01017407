#pragma once

#include <cstdint>
#include <random>

namespace gcn {

// Deterministic draws on top of std::mt19937. The distributions in <random>
// are implementation-defined, so seeded corpora would not be byte-identical
// across standard libraries; these helpers pin the exact sequence.

inline uint32_t rng_below(std::mt19937& rng, uint32_t n) {
  // unbiased via rejection of the truncated tail
  uint32_t limit = (0xFFFFFFFFu / n) * n;
  uint32_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline bool rng_chance(std::mt19937& rng, double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return rng() < static_cast<uint32_t>(p * 4294967296.0);
}

}  // namespace gcn
