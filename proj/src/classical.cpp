#include "symsphere/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symsphere/bloch.hpp"
#include "symsphere/errors.hpp"
#include "symsphere/parallel.hpp"
#include "symsphere/rng.hpp"

namespace symsphere {

namespace {

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 sub(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 normalized(const Vec3& v) {
    const double r = norm(v);
    return {v[0] / r, v[1] / r, v[2] / r};
}

void check_pointset(const PointSet& ps) {
    if (ps.n() < 2) throw Error("PointSet needs at least 2 points");
    for (const auto& p : ps.points)
        if (std::abs(norm(p) - 1.0) > 1e-12)
            throw Error("PointSet entry is not a unit vector");
}

PointSet random_pointset(int n, Rng& rng) {
    PointSet ps;
    ps.points.resize(n);
    for (auto& p : ps.points) rng.unit_vector(p[0], p[1], p[2]);
    return ps;
}

double riesz_energy(const PointSet& ps, double l) {
    const int n = ps.n();
    double e = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Vec3 u = sub(ps.points[i], ps.points[j]);
            e += std::pow(dot(u, u), -0.5 * l);
        }
    return e;
}

// Tangential (sphere-projected) gradient of the Riesz-l energy; returns its
// overall 2-norm.
double riesz_gradient(const PointSet& ps, double l, std::vector<Vec3>& g) {
    const int n = ps.n();
    g.assign(n, Vec3{0.0, 0.0, 0.0});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Vec3 u = sub(ps.points[i], ps.points[j]);
            const double w = -l * std::pow(dot(u, u), -0.5 * (l + 2.0));
            for (int c = 0; c < 3; ++c) {
                g[i][c] += w * u[c];
                g[j][c] -= w * u[c];
            }
        }
    double s2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double proj = dot(g[i], ps.points[i]);
        for (int c = 0; c < 3; ++c) g[i][c] -= proj * ps.points[i][c];
        s2 += dot(g[i], g[i]);
    }
    return std::sqrt(s2);
}

// Monotone projected gradient descent with backtracking line search.  Every
// accepted step strictly lowers the energy, so the recorded trace is
// decreasing by construction.
void descend(PointSet& ps, double l, double gtol, int maxit,
             std::vector<double>* hist) {
    const int n = ps.n();
    double e = riesz_energy(ps, l);
    if (hist) hist->push_back(e);
    double step = 0.05;
    std::vector<Vec3> g;
    for (int it = 0; it < maxit; ++it) {
        const double gn = riesz_gradient(ps, l, g);
        if (gn < gtol) break;
        bool accepted = false;
        for (int h = 0; h < 60 && !accepted; ++h) {
            PointSet trial = ps;
            for (int i = 0; i < n; ++i) {
                Vec3 moved = trial.points[i];
                for (int c = 0; c < 3; ++c) moved[c] -= step * g[i][c];
                trial.points[i] = normalized(moved);
            }
            const double et = riesz_energy(trial, l);
            if (et < e) {
                ps = trial;
                e = et;
                accepted = true;
                step = std::min(step * 1.5, 0.25);
            } else {
                step *= 0.5;
            }
        }
        if (!accepted) break;
        if (hist) hist->push_back(e);
    }
}

// One sweep-based feasibility probe of the maximin polish: push the endpoints
// of every violating pair apart along their chord until either all pairwise
// chords reach `target` or progress stalls.
bool push_to(PointSet& ps, double target, int max_sweeps) {
    const int n = ps.n();
    double best_worst = 0.0;
    int last_progress = 0;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool violated = false;
        double worst = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Vec3 u = sub(ps.points[i], ps.points[j]);
                double d = norm(u);
                worst = std::min(worst, d);
                if (d >= target) continue;
                violated = true;
                Vec3 dir;
                if (d < 1e-12) {
                    // coincident pair: pick a deterministic tangent direction
                    const Vec3& r = ps.points[i];
                    dir = std::abs(r[2]) < 0.9 ? Vec3{-r[1], r[0], 0.0}
                                               : Vec3{0.0, -r[2], r[1]};
                    dir = normalized(dir);
                } else {
                    dir = {u[0] / d, u[1] / d, u[2] / d};
                }
                const double push = 0.5 * (target - d);
                Vec3 a = ps.points[i];
                Vec3 b = ps.points[j];
                for (int c = 0; c < 3; ++c) {
                    a[c] += push * dir[c];
                    b[c] -= push * dir[c];
                }
                ps.points[i] = normalized(a);
                ps.points[j] = normalized(b);
            }
        if (!violated) return true;
        if (worst > best_worst + 1e-15) {
            best_worst = worst;
            last_progress = sweep;
        } else if (sweep - last_progress > 300) {
            return false;
        }
    }
    return toth_objective(ps) >= target - 1e-12;
}

bool lex_less(const PointSet& a, const PointSet& b) {
    return a.points < b.points;
}

} // namespace

double thomson_energy(const PointSet& ps) {
    check_pointset(ps);
    const int n = ps.n();
    double e = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = norm(sub(ps.points[i], ps.points[j]));
            if (d <= 1e-12) throw CoincidentPoints("coincident points in Thomson energy");
            e += 1.0 / d;
        }
    return e;
}

double toth_objective(const PointSet& ps) {
    check_pointset(ps);
    const int n = ps.n();
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            m = std::min(m, norm(sub(ps.points[i], ps.points[j])));
    return m;
}

PointSet optimize_thomson(int n, int restarts, std::uint64_t seed,
                          std::vector<double>* history) {
    if (n < 2) throw Error("optimize_thomson needs n >= 2");
    if (restarts < 1) throw Error("optimize_thomson needs restarts >= 1");

    std::vector<PointSet> results(restarts);
    std::vector<std::vector<double>> traces(restarts);
    parallel_for(static_cast<std::size_t>(restarts), [&](std::size_t r) {
        Rng rng(seed ^ (0x9E3779B97F4A7C15ULL * (r + 1)));
        PointSet ps = random_pointset(n, rng);
        descend(ps, 1.0, 1e-10, 20000, &traces[r]);
        results[r] = std::move(ps);
    });

    int best = 0;
    double best_e = thomson_energy(results[0]);
    for (int r = 1; r < restarts; ++r) {
        const double e = thomson_energy(results[r]);
        if (e < best_e || (e == best_e && lex_less(results[r], results[best]))) {
            best = r;
            best_e = e;
        }
    }
    if (history) *history = traces[best];
    return results[best];
}

PointSet optimize_toth(int n, int restarts, std::uint64_t seed,
                       std::vector<double>* history) {
    if (n < 2) throw Error("optimize_toth needs n >= 2");
    if (restarts < 1) throw Error("optimize_toth needs restarts >= 1");

    std::vector<PointSet> results(restarts);
    std::vector<std::vector<double>> traces(restarts);
    parallel_for(static_cast<std::size_t>(restarts), [&](std::size_t r) {
        Rng rng(seed ^ (0x9E3779B97F4A7C15ULL * (r + 1)));
        PointSet ps = random_pointset(n, rng);
        for (const double l : {2.0, 4.0, 8.0, 16.0, 32.0})
            descend(ps, l, 1e-9, 4000, nullptr);

        // maximin polish: bisect on the achievable common separation, keeping
        // the last feasible configuration
        double lo = toth_objective(ps);
        double hi = 2.0 + 1e-9;
        traces[r].push_back(lo);
        while (hi - lo > 1e-10) {
            const double mid = 0.5 * (lo + hi);
            PointSet trial = ps;
            if (push_to(trial, mid, 4000)) {
                ps = std::move(trial);
                lo = mid;
                traces[r].push_back(lo);
            } else {
                hi = mid;
            }
        }
        results[r] = std::move(ps);
    });

    int best = 0;
    double best_m = toth_objective(results[0]);
    for (int r = 1; r < restarts; ++r) {
        const double m = toth_objective(results[r]);
        if (m > best_m || (m == best_m && lex_less(results[r], results[best]))) {
            best = r;
            best_m = m;
        }
    }
    if (history) *history = traces[best];
    return results[best];
}

std::vector<double> pairwise_distances(const PointSet& ps) {
    check_pointset(ps);
    const int n = ps.n();
    std::vector<double> d;
    d.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) d.push_back(norm(sub(ps.points[i], ps.points[j])));
    std::sort(d.begin(), d.end());
    return d;
}

bool same_structure(const PointSet& a, const PointSet& b, double tol) {
    if (a.n() != b.n()) return false;
    const std::vector<double> da = pairwise_distances(a);
    const std::vector<double> db = pairwise_distances(b);
    for (std::size_t i = 0; i < da.size(); ++i)
        if (std::abs(da[i] - db[i]) > tol) return false;
    return true;
}

SymmetricState pointset_to_state(const PointSet& ps) {
    check_pointset(ps);
    std::vector<BlochPoint> mps;
    mps.reserve(ps.points.size());
    for (const auto& p : ps.points) mps.push_back(BlochPoint::from_unit(p[0], p[1], p[2]));
    return state_from_mps(mps);
}

} // namespace symsphere
