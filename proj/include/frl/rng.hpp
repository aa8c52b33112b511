#pragma once

#include <cstdint>
#include <random>

namespace frl {

/// Seeded generator with hand-rolled draw helpers so that streams are
/// identical across standard libraries (std distributions are not
/// specified bit-exactly; mt19937_64 is).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }

    bool chance(double p) { return uniform() < p; }

private:
    std::mt19937_64 gen_;
};

}  // namespace frl
