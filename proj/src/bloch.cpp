#include "symsphere/bloch.hpp"

#include <algorithm>
#include <cmath>

namespace symsphere {

namespace {
double wrap_2pi(double a) {
    a = std::fmod(a, 2.0 * M_PI);
    if (a < 0.0) a += 2.0 * M_PI;
    if (a >= 2.0 * M_PI) a = 0.0;
    return a;
}
} // namespace

BlochPoint BlochPoint::canonicalized() const {
    double t = theta;
    double p = phi;
    // Fold theta into [0, 2*pi) first, then reflect (t, p) -> (2*pi - t, p + pi)
    // when t > pi.  A negative theta reflects through the pole the same way.
    t = std::fmod(t, 2.0 * M_PI);
    if (t < 0.0) t += 2.0 * M_PI;
    if (t > M_PI) {
        t = 2.0 * M_PI - t;
        p += M_PI;
    }
    p = wrap_2pi(p);
    if (t == 0.0 || t == M_PI) p = 0.0;
    return {t, p};
}

std::array<double, 3> BlochPoint::unit() const {
    const double st = std::sin(theta);
    return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

BlochPoint BlochPoint::from_unit(double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r == 0.0) return {0.0, 0.0};
    const double t = std::acos(std::clamp(z / r, -1.0, 1.0));
    double p = std::atan2(y, x);
    return BlochPoint{t, p}.canonicalized();
}

double chord(const BlochPoint& a, const BlochPoint& b) {
    const auto u = a.unit();
    const auto v = b.unit();
    const double dx = u[0] - v[0];
    const double dy = u[1] - v[1];
    const double dz = u[2] - v[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double chordal(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.inf && b.inf) return 0.0;
    if (a.inf) return 2.0 / std::sqrt(1.0 + std::norm(b.z));
    if (b.inf) return 2.0 / std::sqrt(1.0 + std::norm(a.z));
    return 2.0 * std::abs(a.z - b.z) /
           std::sqrt((1.0 + std::norm(a.z)) * (1.0 + std::norm(b.z)));
}

ExtendedComplex mp_to_root(const BlochPoint& p) {
    const BlochPoint q = p.canonicalized();
    if (q.theta == 0.0) return ExtendedComplex::infinity();
    const double r = 1.0 / std::tan(q.theta / 2.0);
    return ExtendedComplex::of(std::polar(r, -q.phi));
}

BlochPoint root_to_mp(const ExtendedComplex& z) {
    if (z.inf) return {0.0, 0.0};
    const double theta = M_PI - 2.0 * std::atan(std::abs(z.z));
    double phi = (z.z == cplx(0.0, 0.0)) ? 0.0 : -std::arg(z.z);
    return BlochPoint{theta, phi}.canonicalized();
}

} // namespace symsphere
