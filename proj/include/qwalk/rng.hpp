#ifndef QWALK_RNG_HPP
#define QWALK_RNG_HPP

#include <cstdint>
#include <random>

namespace qwalk {

/// Seeded uniform generator with a fully pinned-down output sequence:
/// mt19937_64 words mapped to doubles by the (x >> 11) * 2^-53 rule, so the
/// same seed reproduces the same draws on any platform.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + unit() * (hi - lo); }

    /// Uniform in (lo, hi].
    double uniform_excl_lo(double lo, double hi) { return hi - unit() * (hi - lo); }

    /// Uniform in [lo, hi) excluding exact zero.
    double nonzero_uniform(double lo, double hi) {
        double v = uniform(lo, hi);
        while (v == 0.0) v = uniform(lo, hi);
        return v;
    }

    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(unit() * (static_cast<double>(hi) - lo + 1.0));
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace qwalk

#endif
