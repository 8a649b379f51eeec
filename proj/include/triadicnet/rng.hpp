// Seeded random source with portable draw semantics.
//
// std::uniform_int_distribution is implementation-defined, so identical
// seeds could produce different runs under different standard libraries.
// All randomness in the library goes through this wrapper instead, which
// pins the mapping from raw mt19937_64 output to bounded draws.
#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace triadicnet {

class rng {
  public:
    explicit rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, n). Rejection sampling keeps the draw unbiased.
    std::uint64_t uniform_index(std::uint64_t n)
    {
        assert(n > 0);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform_real()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform double in [lo, hi).
    double uniform_real(double lo, double hi)
    {
        return lo + (hi - lo) * uniform_real();
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace triadicnet
