#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "aqc/rational.hpp"

namespace aqc {

/// Seeded RNG wrapper. All randomness in the library flows through these
/// helpers; they only use raw mt19937_64 draws (no std::*_distribution), so
/// a seed pins the exact byte stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [-1, 1], 53-bit resolution.
    double uniform_pm1() {
        const std::uint64_t bits = engine_() >> 11;  // 53 bits
        return static_cast<double>(bits) * (2.0 / 9007199254740992.0) - 1.0;
    }

    /// Uniform integer in [lo, hi] inclusive.
    long uniform_int(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long>(engine_() % span);
    }

    /// Integer lattice point with entries in [-10, 10], not the zero vector.
    std::vector<Rational> lattice_point(int dim) {
        std::vector<Rational> p;
        while (true) {
            p.clear();
            bool all_zero = true;
            for (int i = 0; i < dim; ++i) {
                const long v = uniform_int(-10, 10);
                if (v != 0) all_zero = false;
                p.emplace_back(v);
            }
            if (!all_zero) return p;
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace aqc
