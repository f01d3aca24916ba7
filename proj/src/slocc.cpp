#include "symsphere/slocc.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace symsphere {

namespace {

std::array<cplx, 2> projective(const ExtendedComplex& v) {
    if (v.inf) return {cplx(1.0, 0.0), cplx(0.0, 0.0)};
    return {v.z, cplx(1.0, 0.0)};
}

// Row-reduced map sending (z1, z2, z3) to (0, 1, inf).
Mat2 to_zero_one_inf(const std::array<ExtendedComplex, 3>& z) {
    if (z[0].inf) return Mat2{cplx(0.0), z[1].z - z[2].z, cplx(1.0), -z[2].z};
    if (z[1].inf) return Mat2{cplx(1.0), -z[0].z, cplx(1.0), -z[2].z};
    if (z[2].inf) return Mat2{cplx(1.0), -z[0].z, cplx(0.0), z[1].z - z[0].z};
    return Mat2{z[1].z - z[2].z, -z[0].z * (z[1].z - z[2].z),
                z[1].z - z[0].z, -z[2].z * (z[1].z - z[0].z)};
}

Mat2 rotation_between(const BlochPoint& a, const BlochPoint& b) {
    const auto u = a.unit();
    const auto v = b.unit();
    const double cx = u[1] * v[2] - u[2] * v[1];
    const double cy = u[2] * v[0] - u[0] * v[2];
    const double cz = u[0] * v[1] - u[1] * v[0];
    const double s = std::sqrt(cx * cx + cy * cy + cz * cz);
    const double c = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    if (s < 1e-14) {
        if (c > 0.0) return Mat2::identity();
        // antipodal pair: rotate by pi about any axis orthogonal to u
        double wx = -u[1], wy = u[0], wz = 0.0; // u x e_z, negated
        double wn = std::sqrt(wx * wx + wy * wy);
        if (wn < 1e-6) {
            wx = 0.0;
            wy = -u[2];
            wz = u[1];
            wn = std::sqrt(wy * wy + wz * wz);
        }
        return Mat2::rotation(M_PI, wx / wn, wy / wn, wz / wn);
    }
    return Mat2::rotation(std::atan2(s, c), cx / s, cy / s, cz / s);
}

// Rotation taking (p1, p2) to (q1, q2); valid when the angular separations match.
Mat2 two_cluster_rotation(const BlochPoint& p1, const BlochPoint& p2, const BlochPoint& q1,
                          const BlochPoint& q2) {
    const Mat2 r1 = rotation_between(p1, q1);
    const BlochPoint p2i = root_to_mp(mobius_apply(r1, mp_to_root(p2)));
    const auto ax = q1.unit();
    const auto up = p2i.unit();
    const auto vq = q2.unit();
    double u[3], v[3];
    double du = 0.0, dv = 0.0;
    const double pu = up[0] * ax[0] + up[1] * ax[1] + up[2] * ax[2];
    const double pv = vq[0] * ax[0] + vq[1] * ax[1] + vq[2] * ax[2];
    for (int i = 0; i < 3; ++i) {
        u[i] = up[i] - pu * ax[i];
        v[i] = vq[i] - pv * ax[i];
        du += u[i] * u[i];
        dv += v[i] * v[i];
    }
    if (du < 1e-20 || dv < 1e-20) return r1;
    const double cxu = u[1] * v[2] - u[2] * v[1];
    const double cyu = u[2] * v[0] - u[0] * v[2];
    const double czu = u[0] * v[1] - u[1] * v[0];
    const double sinA = (cxu * ax[0] + cyu * ax[1] + czu * ax[2]) / std::sqrt(du * dv);
    const double cosA = (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) / std::sqrt(du * dv);
    return Mat2::rotation(std::atan2(sinA, cosA), ax[0], ax[1], ax[2]) * r1;
}

// Map sending (v1, v2) to (0, inf); one representative of the two-point family.
Mat2 to_zero_inf(const ExtendedComplex& v1, const ExtendedComplex& v2) {
    if (v1.inf) return Mat2{cplx(0.0), cplx(1.0), cplx(1.0), -v2.z};
    if (v2.inf) return Mat2{cplx(1.0), -v1.z, cplx(0.0), cplx(1.0)};
    return Mat2{cplx(1.0), -v1.z, cplx(1.0), -v2.z};
}

bool maps_clusters(const Mat2& m, const std::vector<MPCluster>& a,
                   const std::vector<MPCluster>& b, double tol) {
    std::vector<bool> used(b.size(), false);
    for (const auto& ca : a) {
        const BlochPoint img = root_to_mp(mobius_apply(m, mp_to_root(ca.center)));
        int best = -1;
        double bestd = tol;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j] || b[j].multiplicity != ca.multiplicity) continue;
            const double dd = chord(img, b[j].center);
            if (dd < bestd) {
                bestd = dd;
                best = static_cast<int>(j);
            }
        }
        if (best < 0) return false;
        used[best] = true;
    }
    return true;
}

bool cluster_order(const MPCluster& x, const MPCluster& y) {
    if (x.multiplicity != y.multiplicity) return x.multiplicity > y.multiplicity;
    if (x.center.theta != y.center.theta) return x.center.theta < y.center.theta;
    return x.center.phi < y.center.phi;
}

// Multiplicity-respecting permutations of indices 0..n-1 of b against a.
std::vector<std::vector<int>> admissible_permutations(const std::vector<MPCluster>& a,
                                                      const std::vector<MPCluster>& b) {
    const int n = static_cast<int>(a.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = a[i].multiplicity == b[perm[i]].multiplicity;
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

EquivalenceVerdict classify(const SymmetricState& s1, const SymmetricState& s2, double tol,
                            bool lu_mode) {
    if (s1.n() != s2.n()) throw Error("states have different qubit counts");
    const MPDistribution m1 = state_to_mps(s1);
    const MPDistribution m2 = state_to_mps(s2);
    const DCClass dc1 = dc_class(m1);
    const DCClass dc2 = dc_class(m2);
    if (dc1 != dc2) return {Relation::Inequivalent, std::nullopt, "DC mismatch"};

    const double tol_eff = (s1.n() >= 12) ? 10.0 * tol : tol;
    std::vector<MPCluster> a = m1.clusters;
    std::vector<MPCluster> b = m2.clusters;
    std::sort(a.begin(), a.end(), cluster_order);
    std::sort(b.begin(), b.end(), cluster_order);
    const int d = static_cast<int>(a.size());

    std::optional<Mat2> first_valid, first_unitary;
    auto done = [&]() { return lu_mode ? first_unitary.has_value() : first_valid.has_value(); };
    auto consider = [&](const Mat2& cand) {
        if (!maps_clusters(cand, a, b, tol_eff)) return;
        if (!first_valid) first_valid = cand;
        if (!first_unitary && cand.proportional_to_unitary(tol)) first_unitary = cand;
    };

    if (d == 1) {
        consider(rotation_between(a[0].center, b[0].center));
    } else if (d == 2) {
        std::vector<std::array<int, 2>> pairings{{0, 1}};
        if (b[0].multiplicity == b[1].multiplicity) pairings.push_back({1, 0});
        for (const auto& pr : pairings) {
            if (done()) break;
            const double gap =
                chord(a[0].center, a[1].center) - chord(b[pr[0]].center, b[pr[1]].center);
            if (std::abs(gap) <= tol_eff)
                consider(two_cluster_rotation(a[0].center, a[1].center, b[pr[0]].center,
                                              b[pr[1]].center));
            if (done()) break;
            const Mat2 ga = to_zero_inf(mp_to_root(a[0].center), mp_to_root(a[1].center));
            const Mat2 gb = to_zero_inf(mp_to_root(b[pr[0]].center), mp_to_root(b[pr[1]].center));
            consider((gb.adjugate() * ga).unit_det());
        }
    } else {
        if (d == 4) {
            // quadruples are Moebius-equivalent iff an admissible ordering matches
            // the cross-ratio
            const ExtendedComplex l1 =
                cross_ratio(mp_to_root(a[0].center), mp_to_root(a[1].center),
                            mp_to_root(a[2].center), mp_to_root(a[3].center));
            bool matched = false;
            for (const auto& perm : admissible_permutations(a, b)) {
                const ExtendedComplex l2 = cross_ratio(
                    mp_to_root(b[perm[0]].center), mp_to_root(b[perm[1]].center),
                    mp_to_root(b[perm[2]].center), mp_to_root(b[perm[3]].center));
                if (chordal(l1, l2) <= std::max(1e-5, tol_eff)) {
                    matched = true;
                    break;
                }
            }
            if (!matched) return {Relation::Inequivalent, std::nullopt, "cross-ratio mismatch"};
        }
        const std::array<ExtendedComplex, 3> src{mp_to_root(a[0].center), mp_to_root(a[1].center),
                                                 mp_to_root(a[2].center)};
        for (int i = 0; i < d && !done(); ++i) {
            if (b[i].multiplicity != a[0].multiplicity) continue;
            for (int j = 0; j < d && !done(); ++j) {
                if (j == i || b[j].multiplicity != a[1].multiplicity) continue;
                for (int k = 0; k < d && !done(); ++k) {
                    if (k == i || k == j || b[k].multiplicity != a[2].multiplicity) continue;
                    try {
                        consider(mobius_from_triples(
                            src, {mp_to_root(b[i].center), mp_to_root(b[j].center),
                                  mp_to_root(b[k].center)}));
                    } catch (const Error&) {
                        // ill-conditioned candidate triple; skip
                    }
                }
            }
        }
    }

    if (lu_mode && first_unitary)
        return {Relation::LuEquivalent, first_unitary, "unitary witness"};
    if (first_valid) {
        const bool uni = first_valid->proportional_to_unitary(tol);
        return {uni ? Relation::LuEquivalent : Relation::SloccNotLu, first_valid,
                uni ? "unitary witness" : "moebius witness"};
    }
    return {Relation::Inequivalent, std::nullopt, "exhaustive triple search failed"};
}

} // namespace

const char* relation_name(Relation r) {
    switch (r) {
    case Relation::LuEquivalent: return "LU-equivalent";
    case Relation::SloccNotLu: return "SLOCC-equivalent-not-LU";
    default: return "inequivalent";
    }
}

DCClass dc_class(const MPDistribution& mps) {
    DCClass dc;
    for (const auto& c : mps.clusters) dc.partition.push_back(c.multiplicity);
    std::sort(dc.partition.begin(), dc.partition.end(), std::greater<int>());
    return dc;
}

ExtendedComplex cross_ratio(const ExtendedComplex& v1, const ExtendedComplex& v2,
                            const ExtendedComplex& v3, const ExtendedComplex& v4) {
    const ExtendedComplex* v[4] = {&v1, &v2, &v3, &v4};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (chordal(*v[i], *v[j]) < 1e-12)
                throw DegenerateQuadruple("cross-ratio needs four distinct points");
    auto dd = [&](int i, int j) {
        const auto p = projective(*v[i]);
        const auto q = projective(*v[j]);
        return p[0] * q[1] - q[0] * p[1];
    };
    const cplx num = dd(0, 2) * dd(1, 3);
    const cplx den = dd(1, 2) * dd(0, 3);
    if (std::abs(den) == 0.0) return ExtendedComplex::infinity();
    return ExtendedComplex::of(num / den);
}

std::vector<ExtendedComplex> cross_ratio_orbit(const ExtendedComplex& lambda) {
    std::vector<ExtendedComplex> vals;
    if (lambda.inf || std::abs(lambda.z) < 1e-12 || std::abs(lambda.z - 1.0) < 1e-12) {
        vals = {ExtendedComplex::of(cplx(0.0)), ExtendedComplex::of(cplx(1.0)),
                ExtendedComplex::infinity()};
        return vals;
    }
    const cplx l = lambda.z;
    const cplx cand[6] = {l, 1.0 / l, 1.0 - l, 1.0 / (1.0 - l), l / (l - 1.0), (l - 1.0) / l};
    for (const cplx& c : cand) {
        const ExtendedComplex e = ExtendedComplex::of(c);
        bool dup = false;
        for (const auto& seen : vals)
            if (chordal(e, seen) < 1e-9) {
                dup = true;
                break;
            }
        if (!dup) vals.push_back(e);
    }
    return vals;
}

Mat2 mobius_from_triples(const std::array<ExtendedComplex, 3>& src,
                         const std::array<ExtendedComplex, 3>& dst) {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (chordal(src[i], src[j]) < 1e-10 || chordal(dst[i], dst[j]) < 1e-10)
                throw DegenerateTriple("triple points must be pairwise distinct");
    const Mat2 gs = to_zero_one_inf(src);
    const Mat2 gd = to_zero_one_inf(dst);
    const Mat2 m = (gd.adjugate() * gs).unit_det();
    for (int i = 0; i < 3; ++i)
        if (chordal(mobius_apply(m, src[i]), dst[i]) > 1e-9)
            throw Error("triple interpolation verification failed");
    return m;
}

EquivalenceVerdict slocc_equivalence(const SymmetricState& s1, const SymmetricState& s2,
                                     double tol) {
    return classify(s1, s2, tol, false);
}

EquivalenceVerdict lu_equivalence(const SymmetricState& s1, const SymmetricState& s2,
                                  double tol) {
    return classify(s1, s2, tol, true);
}

std::pair<Mat2, AffinePart> decompose_slocc(const Mat2& m_in) {
    Mat2 m = m_in;
    if (std::abs(m.det() - 1.0) > 1e-10) m = m.unit_det();
    const double lambda = std::sqrt(std::norm(m.a) + std::norm(m.c));
    const cplx alpha = m.a / lambda;
    const cplx beta = m.c / lambda;
    const Mat2 u{alpha, -std::conj(beta), beta, std::conj(alpha)};
    const double A = lambda * lambda;
    const cplx B = (std::abs(m.a) >= std::abs(m.c)) ? (A * m.b + std::conj(m.c)) / m.a
                                                    : (A * m.d - std::conj(m.a)) / m.c;
    return {u, AffinePart{A, B}};
}

std::pair<cplx, SymmetricState> canonical_rep_4q(const SymmetricState& s) {
    if (s.n() != 4) throw WrongDiversity("canonical representative needs a 4-qubit state");
    const MPDistribution mps = state_to_mps(s);
    if (mps.clusters.size() != 4)
        throw WrongDiversity("canonical representative needs four distinct Majorana points");

    const std::array<ExtendedComplex, 3> src{mp_to_root(mps.clusters[0].center),
                                             mp_to_root(mps.clusters[1].center),
                                             mp_to_root(mps.clusters[2].center)};
    const std::array<ExtendedComplex, 3> triangle{
        ExtendedComplex::of(cplx(1.0)),
        ExtendedComplex::of(std::polar(1.0, -2.0 * M_PI / 3.0)),
        ExtendedComplex::of(std::polar(1.0, 2.0 * M_PI / 3.0))};
    const Mat2 m = mobius_from_triples(src, triangle);
    const ExtendedComplex z4 = mobius_apply(m, mp_to_root(mps.clusters[3].center));

    // reduce by the triangle's symmetry group {w^k z, w^k / z}
    std::vector<ExtendedComplex> images;
    for (int k = 0; k < 3; ++k) {
        const cplx wk = std::polar(1.0, 2.0 * M_PI * k / 3.0);
        if (z4.inf) {
            images.push_back(ExtendedComplex::infinity());
            images.push_back(ExtendedComplex::of(cplx(0.0)));
        } else if (std::abs(z4.z) == 0.0) {
            images.push_back(ExtendedComplex::of(cplx(0.0)));
            images.push_back(ExtendedComplex::infinity());
        } else {
            images.push_back(ExtendedComplex::of(wk * z4.z));
            images.push_back(ExtendedComplex::of(wk / z4.z));
        }
    }
    bool have = false;
    BlochPoint bestp;
    for (const auto& w : images) {
        BlochPoint p = root_to_mp(w);
        if (p.phi >= 2.0 * M_PI - 1e-9) p.phi = 0.0;
        const bool interior = p.theta < M_PI_2 - 1e-9 && p.phi < 2.0 * M_PI / 3.0 - 1e-9;
        const bool boundary =
            std::abs(p.theta - M_PI_2) <= 1e-9 && p.phi <= M_PI / 3.0 + 1e-9;
        if (!interior && !boundary) continue;
        if (!have || p.theta < bestp.theta - 1e-12 ||
            (std::abs(p.theta - bestp.theta) <= 1e-12 && p.phi < bestp.phi)) {
            bestp = p;
            have = true;
        }
    }
    if (!have) throw Error("canonicalization failed to reach the fundamental domain");

    const cplx t = std::polar(std::tan(bestp.theta / 2.0), bestp.phi);
    const SymmetricState rep =
        normalize(SymmetricState{{cplx(2.0), t, cplx(0.0), cplx(1.0), 2.0 * t}});
    return {t, rep};
}

SymmetricState rep_state_5q(const cplx& t) {
    const double r = std::abs(t);
    if (r > 1.0 + 1e-12) throw OutOfRange("parameter must satisfy |t| <= 1");
    if (r >= 1.0 - 1e-12 && std::arg(t) < -1e-12)
        throw OutOfRange("on the unit circle the parameter phase must lie in [0, pi]");
    const double s2 = std::sqrt(2.0);
    const double s10 = std::sqrt(10.0);
    return normalize(SymmetricState{
        {s10, s2 * (1.0 + t), t, cplx(1.0), s2 * (1.0 + t), s10 * t}});
}

SymmetricState conjugate_state(const SymmetricState& s) {
    std::vector<cplx> a(s.coeffs.size());
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = std::conj(s.coeffs[k]);
    return normalize(SymmetricState{std::move(a)});
}

} // namespace symsphere
