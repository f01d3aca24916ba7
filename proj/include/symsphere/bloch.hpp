#pragma once
#include <array>
#include <complex>

namespace symsphere {

using cplx = std::complex<double>;

// Point on the unit sphere in polar coordinates, theta in [0, pi] measured
// from the +z axis, phi in [0, 2*pi).
struct BlochPoint {
    double theta = 0.0;
    double phi = 0.0;

    BlochPoint() = default;
    BlochPoint(double t, double p) : theta(t), phi(p) {}

    // Folds angles into the canonical ranges; at the poles phi is set to 0.
    BlochPoint canonicalized() const;

    std::array<double, 3> unit() const;
    static BlochPoint from_unit(double x, double y, double z);
};

// Euclidean chord between the two sphere points, in [0, 2].
double chord(const BlochPoint& a, const BlochPoint& b);

// Point of the Riemann sphere: a complex number or the point at infinity.
struct ExtendedComplex {
    cplx z{0.0, 0.0};
    bool inf = false;

    static ExtendedComplex infinity() { return ExtendedComplex{cplx(0.0, 0.0), true}; }
    static ExtendedComplex of(cplx v) { return ExtendedComplex{v, false}; }
};

// Chordal metric on the Riemann sphere; agrees with chord() under
// stereographic projection and has range [0, 2].
double chordal(const ExtendedComplex& a, const ExtendedComplex& b);

// Stereographic dictionary between sphere points and polynomial roots:
//   z = e^{-i phi} cot(theta/2),  north pole <-> infinity, south <-> 0.
ExtendedComplex mp_to_root(const BlochPoint& p);
BlochPoint root_to_mp(const ExtendedComplex& z);

} // namespace symsphere
