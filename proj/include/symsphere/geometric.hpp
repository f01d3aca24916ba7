#pragma once
#include "symsphere/symstate.hpp"

#include <utility>
#include <vector>

namespace symsphere {

// Result of a closest-product-point search.  g_max is the injective tensor
// norm G in (0, 1], e_g = -2 log2(g_max).  When the global maximum is a
// continuous latitude ring (Dicke states), continuous_ring is set and
// ring_theta holds the latitude.
struct CppReport {
    std::vector<BlochPoint> cpps;
    double g_max = 0.0;
    double e_g = 0.0;
    std::vector<std::pair<BlochPoint, double>> local_maxima;
    bool continuous_ring = false;
    double ring_theta = 0.0;
};

struct SphereSamples {
    std::vector<double> thetas;
    std::vector<double> phis;
    std::vector<double> values; // row-major, theta rows then phi columns
};

enum class SampleFunction { Amplitude2, Volume };

// |<sigma(theta,phi)^{(x)n} | state>| evaluated with a hemisphere-stable
// Horner scheme; range [0, 1].
double amplitude(const SymmetricState& s, const BlochPoint& p);

// Grid scan at grid_deg degrees (poles collapsed), simplex ascent from all
// grid-local maxima, dedup at chordal 1e-6, CPPs within relative 1e-9 of
// the best value.
CppReport find_cpps(const SymmetricState& s, double grid_deg = 1.0,
                    double refine_tol = 1e-12);

// find_cpps with defaults; returns e_g in bits.
double entanglement(const SymmetricState& s);

double dicke_entanglement(int n, int k);
CppReport dicke_cpps(int n, int k);

// Quadrature of Integral g^2 sin(theta) dtheta dphi; equals 4*pi/(n+1).
double integral_check(const SymmetricState& s, int quad_order = 64);
// (1/3) of the same integrand; equals 4*pi/(3(n+1)).
double volume_check(const SymmetricState& s, int quad_order = 64);

SphereSamples sample_sphere(const SymmetricState& s, SampleFunction f,
                            int theta_res, int phi_res);

// Specialization for real-nonnegative states: 1-D meridian search plus
// azimuthal replication per the state's Z-rotational structure.
CppReport positive_cpp_search(const SymmetricState& s);

// Largest m such that the nonzero coefficient indices lie in l + j*m;
// returns 0 for single-component (Dicke) states.
int rotational_structure(const SymmetricState& s, int* offset = nullptr);

// Least-squares residual of the state against span{sigma_i^{(x)n}} over the
// report's CPPs; 0 means the state lies in the span.
double span_check(const SymmetricState& s, const CppReport& report);

} // namespace symsphere
