#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace linkpred {

// Deterministic random source shared by the network generator and the
// benchmark sampler. The engine is std::mt19937_64, which the C++ standard
// pins bit-exactly, seeded directly with a single 64-bit value. The standard
// *distributions* are implementation-defined, so every draw goes through the
// explicit procedures below and nothing else.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1): top 53 bits of one engine draw.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound) by masked rejection, no modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
    for (;;) {
      std::uint64_t x = next_u64() & mask;
      if (x < bound) return x;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace linkpred
