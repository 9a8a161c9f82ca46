#pragma once

#include <cmath>
#include <cstdint>

#include "ffsga/errors.hpp"

namespace ffsga {

// SplitMix64 stream. The algorithm and the draw order are part of the
// instance-file reproducibility contract: the same seed must yield the
// same instance in any implementation of this tool, so nothing here may
// depend on platform or standard library internals.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Top 53 bits of the next output, scaled to [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Affine map of next_unit() onto [lo, hi).
    double next_uniform(double lo, double hi) {
        if (!(lo < hi)) throw ContractError("next_uniform: lo must be < hi");
        double v = lo + next_unit() * (hi - lo);
        if (v >= hi) v = std::nextafter(hi, lo);  // guards the open upper bound
        return v;
    }

    // Uniform integer in [0, n).
    int next_index(int n) {
        if (n <= 0) throw ContractError("next_index: n must be positive");
        int v = static_cast<int>(next_unit() * static_cast<double>(n));
        return v < n ? v : n - 1;
    }

    bool next_coin(double p) { return next_unit() < p; }

    std::uint64_t state() const { return state_; }

  private:
    std::uint64_t state_;
};

// Deterministic seed derivation for island / generation / slot substreams.
// One SplitMix64 output of (base advanced by key+1 increments).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t key) {
    Rng r(base + key * 0x9E3779B97F4A7C15ULL);
    return r.next_u64();
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k1, std::uint64_t k2) {
    return derive_seed(derive_seed(base, k1), k2);
}

}  // namespace ffsga
