#pragma once
#include "symsphere/bloch.hpp"
#include "symsphere/errors.hpp"
#include "symsphere/mat2.hpp"

#include <vector>

namespace symsphere {

// Permutation-symmetric n-qubit state in the orthonormal Dicke basis,
// coeffs[k] multiplying the state with k excited qubits, k = 0..n.
struct SymmetricState {
    std::vector<cplx> coeffs;

    SymmetricState() = default;
    explicit SymmetricState(std::vector<cplx> a) : coeffs(std::move(a)) {}

    int n() const { return static_cast<int>(coeffs.size()) - 1; }
};

// psi(z) = sum_k c_k z^k with c_k = (-1)^k binom(n,k)^{1/2} a_k.
// n - degree is the multiplicity of the root at infinity.
struct MajoranaPolynomial {
    std::vector<cplx> c;
    int degree = 0;
};

struct MPCluster {
    BlochPoint center;
    int multiplicity = 0;
};

// Majorana point multiset of a state: raw points (with multiplicity) plus
// the degeneracy clustering.
struct MPDistribution {
    int n = 0;
    std::vector<BlochPoint> points;
    std::vector<MPCluster> clusters;
};

// binom(n, k) as a double; exact for n <= 60.
double binomial(int n, int k);
double sqrt_binomial(int n, int k);

// Unit norm and first nonzero coefficient real-nonnegative.
SymmetricState normalize(const SymmetricState& s);

cplx inner(const SymmetricState& a, const SymmetricState& b);
double fidelity(const SymmetricState& a, const SymmetricState& b);

MajoranaPolynomial majorana_polynomial(const SymmetricState& s);

// Roots of the Majorana polynomial, one per qubit, including the root(s)
// at infinity from the degree drop.
std::vector<ExtendedComplex> majorana_roots(const SymmetricState& s);

SymmetricState state_from_roots(const std::vector<ExtendedComplex>& roots);
SymmetricState state_from_mps(const std::vector<BlochPoint>& points);
MPDistribution state_to_mps(const SymmetricState& s, double cluster_tol = 1e-6);

// Clusters a point multiset by chordal distance; exposed for reuse on
// reference point sets.
std::vector<MPCluster> cluster_points(const std::vector<BlochPoint>& pts, double tol);

SymmetricState rotate_z(const SymmetricState& s, double angle);

// U^{(x)n} restricted to the symmetric subspace; throws NotUnitary unless
// U^dag U = I within 1e-10.
SymmetricState apply_su2(const SymmetricState& s, const Mat2& u);

// M^{(x)n} for any invertible M: the Majorana roots transform by the
// Moebius map z -> (az+b)/(cz+d).  Normalized output.
SymmetricState apply_mobius(const SymmetricState& s, const Mat2& m);

} // namespace symsphere
