#include "symsphere/lmg.hpp"

#include "symsphere/errors.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace symsphere {
namespace {

typedef long double xd;

// Ladder factor sqrt(s(s+1) - m(m+1)) for S_+|s,m> = c |s,m+1>.
xd ladder_up(xd s, xd m) { return std::sqrt(s * (s + 1.0L) - m * (m + 1.0L)); }

// Cyclic Jacobi diagonalization of a dense real symmetric matrix in extended
// precision.  Sweeps until the off-diagonal Frobenius norm is below tol and
// has either reached the roundoff plateau or stopped shrinking.  Eigenvectors
// come back as columns of v.
void jacobi_eigensolve(std::vector<std::vector<xd>>& a,
                       std::vector<std::vector<xd>>& v, xd tol) {
    const size_t n = a.size();
    v.assign(n, std::vector<xd>(n, 0.0L));
    for (size_t i = 0; i < n; ++i) v[i][i] = 1.0L;
    xd fro = 0.0L;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) fro += a[i][j] * a[i][j];
    const xd floor_tol = std::sqrt(fro) * static_cast<xd>(n) * 1e-19L;
    xd prev = std::numeric_limits<xd>::max();
    for (int sweep = 0; sweep < 200; ++sweep) {
        xd off = 0.0L;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        off = std::sqrt(2.0L * off);
        if (off < tol && (off <= floor_tol || off > 0.25L * prev)) return;
        prev = off;
        for (size_t p = 0; p < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0L) continue;
                const xd theta = 0.5L * (a[q][q] - a[p][p]) / a[p][q];
                const xd t = (theta >= 0.0L ? 1.0L : -1.0L) /
                             (std::abs(theta) + std::sqrt(theta * theta + 1.0L));
                const xd c = 1.0L / std::sqrt(t * t + 1.0L);
                const xd s = t * c;
                for (size_t i = 0; i < n; ++i) {
                    const xd aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (size_t i = 0; i < n; ++i) {
                    const xd api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
                for (size_t i = 0; i < n; ++i) {
                    const xd vip = v[i][p], viq = v[i][q];
                    v[i][p] = c * vip - s * viq;
                    v[i][q] = s * vip + c * viq;
                }
            }
        }
    }
    throw RootFindingFailed("Jacobi eigensolver did not reach the requested residual");
}

} // namespace

SymmetricState ground_state(const LmgParams& p) {
    if (p.two_s < 2) throw OutOfRange("LmgParams requires 2s >= 2");
    if (!(p.gamma > 0.0)) throw OutOfRange("LmgParams requires gamma > 0");
    if (p.h < 0.0) throw OutOfRange("LmgParams requires h >= 0");

    const int n = p.two_s;
    const xd s = 0.5L * n;
    const xd gamma = p.gamma;
    const xd h = p.h;

    // H in the rephased basis i^{s-m} |s,m>, rows indexed by k = s - m:
    //   <m|H|m>   = -(gamma/2n)(s(s+1) - m^2) - h m
    //   <m|H|m-2> = -(gamma/4n) c_+(m-2) c_+(m-1)
    // The rephasing keeps H real while turning the quadratic couplings
    // negative; in this gauge the Majorana points of symmetry-broken ground
    // states land on the imaginary great circle.
    //
    // Since H couples k to k +- 2 only, the even-k and odd-k sectors
    // decouple.  The ground state sits in the even sector (at h = 0 the two
    // sectors tie and the even representative is returned).  Solving only
    // that block keeps the odd coefficients exactly zero and avoids mixing
    // the quasi-degenerate pair of the broken phase, whose splitting falls
    // below machine epsilon already around n = 50.
    const size_t blk = static_cast<size_t>(n / 2) + 1;
    std::vector<std::vector<xd>> hmat(blk, std::vector<xd>(blk, 0.0L));
    for (size_t j = 0; j < blk; ++j) {
        const xd m = s - 2.0L * static_cast<xd>(j);
        hmat[j][j] = -(gamma / (2.0L * n)) * (s * (s + 1.0L) - m * m) - h * m;
        if (j + 1 < blk) {
            const xd c = (gamma / (4.0L * n)) * ladder_up(s, m - 2.0L) * ladder_up(s, m - 1.0L);
            hmat[j][j + 1] = -c;
            hmat[j + 1][j] = -c;
        }
    }

    std::vector<std::vector<xd>> vec;
    jacobi_eigensolve(hmat, vec, 1e-12L);

    size_t best = 0;
    for (size_t j = 1; j < blk; ++j)
        if (hmat[j][j] < hmat[best][best]) best = j;

    std::vector<cplx> coeffs(static_cast<size_t>(n) + 1, cplx(0.0, 0.0));
    for (size_t j = 0; j < blk; ++j)
        coeffs[2 * j] = cplx(static_cast<double>(vec[j][best]), 0.0);
    return normalize(SymmetricState(std::move(coeffs)));
}

double mp_density(double h, double theta) {
    if (h < 0.0) throw OutOfRange("mp_density requires h >= 0");
    const double c = std::cos(theta);
    if (h <= 1.0) return (1.0 + h * c) / (2.0 * M_PI);
    if (std::abs(theta) > std::acos((h - 2.0) / h))
        throw OutOfSupport("theta outside the Majorana arc for h >= 1");
    return std::sqrt(h * (1.0 + c) * (2.0 - h + h * c)) / (2.0 * M_PI);
}

double log_amplitude_broken(double h, double theta) {
    if (h < 0.0 || h > 1.0) throw OutOfRange("log_amplitude_broken requires 0 <= h <= 1");
    const double sa = 1.0 + std::abs(std::sin(theta));
    return 2.0 - std::log2(sa) - h / std::log(2.0) * std::cos(theta) / sa;
}

double cpp_latitude(double h) {
    if (h < 0.0) throw OutOfRange("cpp_latitude requires h >= 0");
    return h <= 1.0 ? std::acos(h) : 0.0;
}

} // namespace symsphere
