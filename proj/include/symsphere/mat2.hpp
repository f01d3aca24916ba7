#pragma once
#include "symsphere/bloch.hpp"

namespace symsphere {

// 2x2 complex matrix [[a, b], [c, d]].
struct Mat2 {
    cplx a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

    cplx det() const { return a * d - b * c; }
    cplx trace() const { return a + d; }
    Mat2 adjugate() const { return {d, -b, -c, a}; }
    Mat2 dagger() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }
    double frobenius() const;

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator*(cplx s) const { return {a * s, b * s, c * s, d * s}; }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }

    // Rescales to unit determinant (principal square root branch).
    Mat2 unit_det() const;

    // M is proportional to a unitary iff M^dag M is a multiple of the
    // identity; tol bounds the Frobenius norm of the deviation after
    // normalizing the scale.
    bool proportional_to_unitary(double tol = 1e-8) const;

    static Mat2 identity() { return {}; }
    static Mat2 rotation_z(double alpha);
    // Rotation by `angle` about the unit axis (x, y, z), in SU(2).
    static Mat2 rotation(double angle, double x, double y, double z);
};

// Action of the invertible matrix M on the Riemann sphere,
// z -> (a z + b) / (c z + d), with the point at infinity handled exactly.
ExtendedComplex mobius_apply(const Mat2& m, const ExtendedComplex& z);

} // namespace symsphere
