#pragma once
#include <cstdint>

namespace symsphere {

// Deterministic 64-bit linear congruential generator (Knuth's MMIX
// constants).  Doubles are built from the top 53 bits, so identical seeds
// give bit-identical streams on every platform, which the reproducibility
// guarantees of the CLI rely on.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) noexcept : state_(seed) { next(); }

    std::uint64_t next() noexcept {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    // uniform in [0, 1)
    double uniform01() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) noexcept { return a + (b - a) * uniform01(); }

    double normal() noexcept;

    // uniform point on the unit sphere
    void unit_vector(double& x, double& y, double& z) noexcept;

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace symsphere
