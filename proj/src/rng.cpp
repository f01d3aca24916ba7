#include "symsphere/rng.hpp"

#include <cmath>

namespace symsphere {

double Rng::normal() noexcept {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 is kept away from zero so the log is finite.
    double u1 = 0.0;
    do {
        u1 = uniform01();
    } while (u1 <= 0.0);
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

void Rng::unit_vector(double& x, double& y, double& z) noexcept {
    z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * M_PI);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    x = rho * std::cos(phi);
    y = rho * std::sin(phi);
}

} // namespace symsphere
