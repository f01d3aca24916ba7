#include "symsphere/mat2.hpp"

#include <cmath>

namespace symsphere {

double Mat2::frobenius() const {
    return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
}

Mat2 Mat2::unit_det() const {
    const cplx s = std::sqrt(det());
    return {a / s, b / s, c / s, d / s};
}

bool Mat2::proportional_to_unitary(double tol) const {
    const Mat2 g = dagger() * (*this);
    const double scale = 0.5 * std::real(g.trace());
    if (scale <= 0.0) return false;
    const Mat2 dev = g - Mat2{scale, 0.0, 0.0, scale};
    return dev.frobenius() / scale <= tol;
}

Mat2 Mat2::rotation_z(double alpha) {
    // exp(-i alpha sigma_z / 2)
    return {std::polar(1.0, -alpha / 2.0), 0.0, 0.0, std::polar(1.0, alpha / 2.0)};
}

Mat2 Mat2::rotation(double angle, double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r > 0.0) {
        x /= r;
        y /= r;
        z /= r;
    }
    const double ch = std::cos(angle / 2.0);
    const double sh = std::sin(angle / 2.0);
    const cplx i(0.0, 1.0);
    // exp(-i angle (n . sigma) / 2)
    return {ch - i * sh * z, -i * sh * x - sh * y,
            -i * sh * x + sh * y, ch + i * sh * z};
}

ExtendedComplex mobius_apply(const Mat2& m, const ExtendedComplex& z) {
    cplx p, q;
    if (z.inf) {
        p = m.a;
        q = m.c;
    } else {
        p = m.a * z.z + m.b;
        q = m.c * z.z + m.d;
    }
    if (std::abs(q) == 0.0) return ExtendedComplex::infinity();
    // Guard against overflow when |p| >> |q|: treat as infinity once the
    // quotient leaves the double range.
    const cplx w = p / q;
    if (!std::isfinite(std::real(w)) || !std::isfinite(std::imag(w)))
        return ExtendedComplex::infinity();
    return ExtendedComplex::of(w);
}

} // namespace symsphere
