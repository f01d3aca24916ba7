#include "symsphere/symstate.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace symsphere {

namespace {

constexpr int kMaxBinomial = 60;

const std::vector<std::vector<double>>& binomial_table() {
    static const std::vector<std::vector<double>> table = [] {
        std::vector<std::vector<double>> t(kMaxBinomial + 1);
        for (int n = 0; n <= kMaxBinomial; ++n) {
            t[n].assign(n + 1, 1.0);
            for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table;
}

// Evaluates sum_k c_k z^k by Horner.
cplx poly_eval(const std::vector<cplx>& c, cplx z) {
    cplx v(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
    return v;
}

std::vector<cplx> poly_derivative(const std::vector<cplx>& c) {
    std::vector<cplx> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * double(k));
    if (d.empty()) d.push_back(cplx(0.0, 0.0));
    return d;
}

// Scaled residual of a candidate root.  For |z| > 1 the reversed polynomial
// at 1/z is used, which bounds |psi(z)| / (max|c| * max(1,|z|)^deg) and stays
// meaningful for near-pole roots.
double root_residual(const std::vector<cplx>& c, cplx z) {
    double cmax = 0.0;
    for (const auto& ck : c) cmax = std::max(cmax, std::abs(ck));
    if (cmax == 0.0) return 0.0;
    if (std::abs(z) <= 1.0) return std::abs(poly_eval(c, z)) / cmax;
    std::vector<cplx> rev(c.rbegin(), c.rend());
    return std::abs(poly_eval(rev, 1.0 / z)) / cmax;
}

// Newton iteration; for |z| > 1 iterates on the reversed polynomial in
// w = 1/z for conditioning.  Returns the best point seen.
cplx newton_polish(const std::vector<cplx>& c, cplx z) {
    const bool outside = std::abs(z) > 1.0;
    std::vector<cplx> p = c;
    if (outside) std::reverse(p.begin(), p.end());
    const std::vector<cplx> dp = poly_derivative(p);
    cplx w = outside ? 1.0 / z : z;
    cplx best = w;
    double best_abs = std::abs(poly_eval(p, w));
    for (int it = 0; it < 40; ++it) {
        const cplx f = poly_eval(p, w);
        const cplx df = poly_eval(dp, w);
        if (std::abs(df) == 0.0) break;
        const cplx step = f / df;
        w -= step;
        const double fa = std::abs(poly_eval(p, w));
        if (fa < best_abs) {
            best_abs = fa;
            best = w;
        }
        if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(w))) break;
    }
    if (!outside) return best;
    if (std::abs(best) == 0.0) return cplx(1e300, 0.0);
    return 1.0 / best;
}

double chordal_fin(const cplx& a, const cplx& b) {
    return 2.0 * std::abs(a - b) / std::sqrt((1.0 + std::norm(a)) * (1.0 + std::norm(b)));
}

// Newton polish of a multiplicity-m root on the (m-1)-th derivative, where it
// is simple; reversed coordinates are used outside the unit disk.
cplx polish_multiple(const std::vector<cplx>& q, cplx z0, int m) {
    const bool outside = std::abs(z0) > 1.0;
    std::vector<cplx> base = q;
    if (outside) std::reverse(base.begin(), base.end());
    for (int j = 0; j < m - 1; ++j) base = poly_derivative(base);
    const std::vector<cplx> dbase = poly_derivative(base);
    cplx w = outside ? 1.0 / z0 : z0;
    cplx best = w;
    double best_abs = std::abs(poly_eval(base, w));
    for (int it = 0; it < 60; ++it) {
        const cplx f = poly_eval(base, w);
        const cplx df = poly_eval(dbase, w);
        if (std::abs(df) == 0.0) break;
        const cplx step = f / df;
        w -= step;
        const double fa = std::abs(poly_eval(base, w));
        if (fa < best_abs) {
            best_abs = fa;
            best = w;
        }
        if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(w))) break;
    }
    if (!outside) return best;
    if (std::abs(best) == 0.0) return cplx(1e300, 0.0);
    return 1.0 / best;
}

// Polishes raw root estimates in place.  A multiplicity-m root can only be
// located to ~eps^(1/m) from plain evaluations, so estimates are first grouped
// and each group is re-polished on the derivative of matching order; the
// strict residual gate below rejects groups of genuinely distinct roots, which
// then fall back to independent polishing.
bool polish_root_set(const std::vector<cplx>& q, const std::vector<cplx>& full,
                     std::vector<cplx>& raw) {
    const int e = static_cast<int>(raw.size());
    std::vector<int> parent(e);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (int i = 0; i < e; ++i)
        for (int j = i + 1; j < e; ++j)
            if (chordal_fin(raw[i], raw[j]) < 1e-3) parent[find(i)] = find(j);
    std::vector<std::vector<int>> groups(e);
    for (int i = 0; i < e; ++i) groups[find(i)].push_back(i);

    std::vector<cplx> out;
    for (const auto& g : groups) {
        if (g.empty()) continue;
        const int m = static_cast<int>(g.size());
        bool resolved = false;
        if (m >= 2) {
            int noutside = 0;
            for (int idx : g)
                if (std::abs(raw[idx]) > 1.0) ++noutside;
            cplx centroid(0.0, 0.0);
            if (2 * noutside > m) {
                for (int idx : g) centroid += 1.0 / raw[idx];
                centroid = (std::abs(centroid) == 0.0) ? cplx(1e300, 0.0)
                                                       : cplx(double(m)) / centroid;
            } else {
                for (int idx : g) centroid += raw[idx];
                centroid /= double(m);
            }
            const cplx z0 = polish_multiple(q, centroid, m);
            bool good = std::isfinite(z0.real()) && std::isfinite(z0.imag());
            std::vector<cplx> dj = q;
            for (int j = 0; j < m && good; ++j) {
                if (root_residual(dj, z0) > 1e-10) good = false;
                dj = poly_derivative(dj);
            }
            if (good) {
                for (int i = 0; i < m; ++i) out.push_back(z0);
                resolved = true;
            }
        }
        if (!resolved) {
            for (int idx : g) {
                const cplx z = newton_polish(q, raw[idx]);
                if (root_residual(full, z) > 1e-8) return false;
                out.push_back(z);
            }
        }
    }
    raw = out;
    return true;
}

// Parlett-Reinsch balancing: a diagonal powers-of-two similarity that evens
// out row and column norms.  Companion matrices of polynomials with graded
// coefficients are badly unbalanced, and the QR iteration loses the small
// eigenvalues entirely without this step.
void balance_in_place(Eigen::MatrixXcd& a) {
    const int n = static_cast<int>(a.rows());
    bool again = true;
    while (again) {
        again = false;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                r += std::abs(a(i, j));
                c += std::abs(a(j, i));
            }
            if (r == 0.0 || c == 0.0) continue;
            const double total = r + c;
            double f = 1.0;
            while (c < 0.5 * r) {
                c *= 2.0;
                r *= 0.5;
                f *= 2.0;
            }
            while (c >= 2.0 * r) {
                c *= 0.5;
                r *= 2.0;
                f *= 0.5;
            }
            if (c + r < 0.95 * total) {
                again = true;
                for (int j = 0; j < n; ++j) a(i, j) /= f;
                for (int j = 0; j < n; ++j) a(j, i) *= f;
            }
        }
    }
}

std::vector<cplx> roots_by_companion(const std::vector<cplx>& q) {
    const int e = static_cast<int>(q.size()) - 1;
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(e, e);
    for (int i = 1; i < e; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < e; ++i) comp(i, e - 1) = -q[i] / q[e];
    balance_in_place(comp);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, false);
    std::vector<cplx> roots(e);
    for (int i = 0; i < e; ++i) roots[i] = solver.eigenvalues()(i);
    return roots;
}

std::vector<cplx> roots_by_durand_kerner(const std::vector<cplx>& q) {
    const int e = static_cast<int>(q.size()) - 1;
    std::vector<cplx> m(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) m[k] = q[k] / q[e];
    double radius = 0.0;
    for (int k = 0; k < e; ++k) radius = std::max(radius, std::abs(m[k]));
    radius = 1.0 + radius;
    std::vector<cplx> z(e);
    const cplx g(0.4, 0.9);
    cplx acc(1.0, 0.0);
    for (int i = 0; i < e; ++i) {
        acc *= g;
        z[i] = radius * acc;
    }
    for (int iter = 0; iter < 600; ++iter) {
        double moved = 0.0;
        for (int i = 0; i < e; ++i) {
            cplx denom(1.0, 0.0);
            for (int j = 0; j < e; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (std::abs(denom) == 0.0) {
                z[i] += cplx(1e-8, 1e-8);
                continue;
            }
            const cplx delta = poly_eval(m, z[i]) / denom;
            z[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-15 * radius) break;
    }
    return z;
}

} // namespace

double binomial(int n, int k) {
    if (k < 0 || k > n || n < 0 || n > kMaxBinomial) return 0.0;
    return binomial_table()[n][k];
}

double sqrt_binomial(int n, int k) { return std::sqrt(binomial(n, k)); }

SymmetricState normalize(const SymmetricState& s) {
    double norm2 = 0.0;
    double amax = 0.0;
    for (const auto& a : s.coeffs) {
        norm2 += std::norm(a);
        amax = std::max(amax, std::abs(a));
    }
    if (amax < 1e-300) throw ZeroState("all coefficients vanish");
    SymmetricState out = s;
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : out.coeffs) a *= inv;
    for (const auto& a : out.coeffs) {
        if (std::abs(a) > 1e-12) {
            const cplx phase = std::polar(1.0, -std::arg(a));
            for (auto& b : out.coeffs) b *= phase;
            break;
        }
    }
    return out;
}

cplx inner(const SymmetricState& a, const SymmetricState& b) {
    cplx v(0.0, 0.0);
    const std::size_t m = std::min(a.coeffs.size(), b.coeffs.size());
    for (std::size_t k = 0; k < m; ++k) v += std::conj(a.coeffs[k]) * b.coeffs[k];
    return v;
}

double fidelity(const SymmetricState& a, const SymmetricState& b) {
    return std::norm(inner(a, b));
}

MajoranaPolynomial majorana_polynomial(const SymmetricState& s) {
    const int n = s.n();
    MajoranaPolynomial p;
    p.c.resize(n + 1);
    double cmax = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        p.c[k] = sign * sqrt_binomial(n, k) * s.coeffs[k];
        cmax = std::max(cmax, std::abs(p.c[k]));
    }
    // Degree drops only on coefficients that are zero to far below any
    // meaningful scale.  Trimming at a looser threshold is catastrophic for
    // roots outside the unit disk: a discarded c_k shifts values by
    // |c_k| |z|^k, so even 1e-12 relative tails move roots by whole radians.
    p.degree = 0;
    for (int k = 0; k <= n; ++k)
        if (std::abs(p.c[k]) > 1e-250 * cmax) p.degree = k;
    return p;
}

std::vector<ExtendedComplex> majorana_roots(const SymmetricState& s) {
    const int n = s.n();
    const MajoranaPolynomial poly = majorana_polynomial(s);
    double cmax = 0.0;
    for (const auto& ck : poly.c) cmax = std::max(cmax, std::abs(ck));
    if (cmax == 0.0) throw ZeroState("all coefficients vanish");

    const int d = poly.degree;
    int low = 0;
    while (low < d && std::abs(poly.c[low]) <= 1e-250 * cmax) ++low;

    // Truncated polynomial c_0..c_d with sub-dust coefficients snapped to
    // exact zeros; `low` roots at the origin are split off before numerical
    // root finding.  The snap threshold is a denormal guard only: genuinely
    // small coefficients carry the far roots and must be kept.
    std::vector<cplx> full(poly.c.begin(), poly.c.begin() + d + 1);
    for (auto& ck : full)
        if (std::abs(ck) <= 1e-250 * cmax) ck = cplx(0.0, 0.0);
    std::vector<cplx> q(full.begin() + low, full.end());

    std::vector<ExtendedComplex> roots;
    for (int i = 0; i < n - d; ++i) roots.push_back(ExtendedComplex::infinity());
    for (int i = 0; i < low; ++i) roots.push_back(ExtendedComplex::of(cplx(0.0, 0.0)));

    const int e = static_cast<int>(q.size()) - 1;
    if (e > 0) {
        std::vector<cplx> raw = roots_by_companion(q);
        if (!polish_root_set(q, full, raw)) {
            raw = roots_by_durand_kerner(q);
            if (!polish_root_set(q, full, raw))
                throw RootFindingFailed("root polishing residual above 1e-8");
        }
        for (const auto& z : raw) roots.push_back(ExtendedComplex::of(z));
    }
    return roots;
}

SymmetricState state_from_roots(const std::vector<ExtendedComplex>& roots) {
    const int n = static_cast<int>(roots.size());
    // Monic product over the finite roots; each root at infinity drops the
    // degree by one.
    std::vector<cplx> p{cplx(1.0, 0.0)};
    for (const auto& r : roots) {
        if (r.inf) continue;
        std::vector<cplx> next(p.size() + 1, cplx(0.0, 0.0));
        for (std::size_t k = 0; k < p.size(); ++k) {
            next[k + 1] += p[k];
            next[k] -= p[k] * r.z;
        }
        p = std::move(next);
    }
    std::vector<cplx> a(n + 1, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        a[k] = p[k] * sign / sqrt_binomial(n, static_cast<int>(k));
    }
    return normalize(SymmetricState{std::move(a)});
}

SymmetricState state_from_mps(const std::vector<BlochPoint>& points) {
    std::vector<ExtendedComplex> roots;
    roots.reserve(points.size());
    for (const auto& p : points) roots.push_back(mp_to_root(p));
    return state_from_roots(roots);
}

std::vector<MPCluster> cluster_points(const std::vector<BlochPoint>& pts, double tol) {
    const int m = static_cast<int>(pts.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (chord(pts[i], pts[j]) < tol) parent[find(i)] = find(j);

    std::vector<MPCluster> clusters;
    std::vector<int> root_of(m, -1);
    for (int i = 0; i < m; ++i) {
        const int r = find(i);
        if (root_of[r] < 0) {
            root_of[r] = static_cast<int>(clusters.size());
            clusters.push_back({});
        }
    }
    std::vector<std::array<double, 3>> sums(clusters.size(), {0.0, 0.0, 0.0});
    for (int i = 0; i < m; ++i) {
        const int c = root_of[find(i)];
        const auto u = pts[i].unit();
        for (int d = 0; d < 3; ++d) sums[c][d] += u[d];
        clusters[c].multiplicity += 1;
    }
    for (std::size_t c = 0; c < clusters.size(); ++c)
        clusters[c].center = BlochPoint::from_unit(sums[c][0], sums[c][1], sums[c][2]);
    std::sort(clusters.begin(), clusters.end(), [](const MPCluster& a, const MPCluster& b) {
        if (a.center.theta != b.center.theta) return a.center.theta < b.center.theta;
        return a.center.phi < b.center.phi;
    });
    return clusters;
}

MPDistribution state_to_mps(const SymmetricState& s, double cluster_tol) {
    MPDistribution dist;
    dist.n = s.n();
    const std::vector<ExtendedComplex> roots = majorana_roots(s);
    for (const auto& r : roots) dist.points.push_back(root_to_mp(r));
    std::sort(dist.points.begin(), dist.points.end(), [](const BlochPoint& a, const BlochPoint& b) {
        if (a.theta != b.theta) return a.theta < b.theta;
        return a.phi < b.phi;
    });
    dist.clusters = cluster_points(dist.points, cluster_tol);
    return dist;
}

SymmetricState rotate_z(const SymmetricState& s, double angle) {
    SymmetricState out = s;
    for (int k = 0; k <= s.n(); ++k) out.coeffs[k] *= std::polar(1.0, angle * k);
    return normalize(out);
}

namespace {

// Substitutes the spinor action of M into the homogeneous Majorana form:
// Psi(x, y) = sum_k binom(n,k)^{1/2} a_k x^{n-k} y^k transforms to
// Psi(ax + cy, bx + dy), which is the symmetric restriction of M^{(x)n}.
SymmetricState substitute(const SymmetricState& s, const Mat2& m) {
    const int n = s.n();
    std::vector<cplx> pa(n + 1), pb(n + 1), pc(n + 1), pd(n + 1);
    pa[0] = pb[0] = pc[0] = pd[0] = cplx(1.0, 0.0);
    for (int i = 1; i <= n; ++i) {
        pa[i] = pa[i - 1] * m.a;
        pb[i] = pb[i - 1] * m.b;
        pc[i] = pc[i - 1] * m.c;
        pd[i] = pd[i - 1] * m.d;
    }
    std::vector<cplx> mono(n + 1, cplx(0.0, 0.0));
    for (int j = 0; j <= n; ++j) {
        if (std::abs(s.coeffs[j]) == 0.0) continue;
        const cplx w = sqrt_binomial(n, j) * s.coeffs[j];
        for (int p = 0; p <= n - j; ++p) {
            const cplx left = binomial(n - j, p) * pa[n - j - p] * pc[p];
            for (int q = 0; q <= j; ++q) {
                mono[p + q] += w * left * binomial(j, q) * pb[j - q] * pd[q];
            }
        }
    }
    std::vector<cplx> a(n + 1);
    for (int k = 0; k <= n; ++k) a[k] = mono[k] / sqrt_binomial(n, k);
    return normalize(SymmetricState{std::move(a)});
}

} // namespace

SymmetricState apply_su2(const SymmetricState& s, const Mat2& u) {
    const Mat2 g = u.dagger() * u;
    const Mat2 dev = g - Mat2::identity();
    if (dev.frobenius() > 1e-10) throw NotUnitary("matrix is not unitary within 1e-10");
    return substitute(s, u);
}

SymmetricState apply_mobius(const SymmetricState& s, const Mat2& m) {
    if (std::abs(m.det()) < 1e-14) throw Error("singular Moebius matrix");
    return substitute(s, m);
}

} // namespace symsphere
