#pragma once
#include "symsphere/symstate.hpp"

namespace symsphere {

// Collective spin model H = -(gamma/n) S_y^2 - h S_z restricted to the
// maximum-spin sector, n = 2s spins.
struct LmgParams {
    int two_s = 2;      // twice the total spin, so half-integer s is exact
    double gamma = 1.0; // coupling, > 0
    double h = 0.0;     // transverse field, >= 0
};

// Ground state as a symmetric n-qubit state, n = two_s.  The Hamiltonian is
// assembled in the |s,m> basis, where it is real symmetric and couples m to
// m +- 2 only, so the two m-parity sectors decouple; the ground state lives
// in the sector containing m = s and the solve is restricted there, which
// keeps the complementary Dicke coefficients exactly zero.  The block is
// diagonalized by cyclic Jacobi sweeps in extended precision to an
// off-diagonal residual below 1e-12, and the lowest eigenvector is mapped to
// Dicke coefficients via k = s - m.  Throws OutOfRange on bad parameters.
SymmetricState ground_state(const LmgParams& p);

// Thermodynamic-limit density of Majorana points along their great circle,
// gamma normalized to 1.  For h <= 1 the support is the full circle; for
// h >= 1 it is |theta| <= arccos((h-2)/h) and OutOfSupport is thrown
// outside.  Throws OutOfRange for h < 0.
double mp_density(double h, double theta);

// Thermodynamic-limit logarithmic product amplitude in the broken phase
// 0 <= h <= 1, evaluated at polar angle theta against the Majorana circle.
// Matches the direct quadrature of the defining integral to 1e-8.
double log_amplitude_broken(double h, double theta);

// Latitude of the closest product points in the thermodynamic limit:
// arccos(h) in the broken phase (a reflection-symmetric pair), 0 for
// h >= 1 (unique CPP at the north pole).  Throws OutOfRange for h < 0.
double cpp_latitude(double h);

} // namespace symsphere
