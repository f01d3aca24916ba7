#include "symsphere/geometric.hpp"
#include "symsphere/optim.hpp"
#include "symsphere/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace symsphere {

namespace {

// Conjugated, binomial-weighted coefficients: g = |sum_k w_k c^{n-k} (e^{i phi} s)^k|.
std::vector<cplx> overlap_weights(const SymmetricState& s) {
    const int n = s.n();
    std::vector<cplx> w(n + 1);
    for (int k = 0; k <= n; ++k) w[k] = std::conj(s.coeffs[k]) * sqrt_binomial(n, k);
    return w;
}

double amplitude_from_weights(const std::vector<cplx>& w, double theta, double phi) {
    const int n = static_cast<int>(w.size()) - 1;
    const double c = std::cos(theta / 2.0);
    const double sn = std::sin(theta / 2.0);
    // Horner in the contracted variable of the dominant hemisphere.
    if (c >= sn) {
        const cplx t = std::polar(sn / c, phi);
        cplx v(0.0, 0.0);
        for (int k = n; k >= 0; --k) v = v * t + w[k];
        return std::min(1.0, std::abs(v) * std::pow(c, n));
    }
    const cplx u = std::polar(c / sn, -phi);
    cplx v(0.0, 0.0);
    for (int k = 0; k <= n; ++k) v = v * u + w[k];
    return std::min(1.0, std::abs(v) * std::pow(sn, n));
}

struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Nodes and weights on [-1, 1] by Newton iteration on the Legendre
// recurrence.
GaussLegendre gauss_legendre(int order) {
    GaussLegendre g;
    g.nodes.resize(order);
    g.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int m = 2; m <= order; ++m) {
                const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        g.nodes[i] = x;
        g.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return g;
}

struct GridMax {
    BlochPoint p;
    double g = 0.0;
};

double quadrature_g2(const SymmetricState& s, int quad_order) {
    const int n = s.n();
    const std::vector<cplx> w = overlap_weights(s);
    const GaussLegendre gl = gauss_legendre(quad_order);
    const int m_phi = 256;
    std::vector<cplx> ephi(m_phi);
    for (int j = 0; j < m_phi; ++j) ephi[j] = std::polar(1.0, 2.0 * M_PI * j / m_phi);

    double total = 0.0;
    for (int i = 0; i < quad_order; ++i) {
        const double theta = std::acos(gl.nodes[i]);
        const double c = std::cos(theta / 2.0);
        const double sn = std::sin(theta / 2.0);
        std::vector<cplx> row(n + 1);
        for (int k = 0; k <= n; ++k)
            row[k] = w[k] * std::pow(c, n - k) * std::pow(sn, k);
        double phi_sum = 0.0;
        for (int j = 0; j < m_phi; ++j) {
            cplx v(0.0, 0.0);
            for (int k = n; k >= 0; --k) v = v * ephi[j] + row[k];
            phi_sum += std::norm(v);
        }
        total += gl.weights[i] * phi_sum * (2.0 * M_PI / m_phi);
    }
    return total;
}

} // namespace

double amplitude(const SymmetricState& s, const BlochPoint& p) {
    const BlochPoint q = p.canonicalized();
    return amplitude_from_weights(overlap_weights(s), q.theta, q.phi);
}

double dicke_entanglement(int n, int k) {
    if (k == 0 || k == n) return 0.0;
    const double r = double(k) / n;
    return -(std::log2(binomial(n, k)) + k * std::log2(r) + (n - k) * std::log2(1.0 - r));
}

CppReport dicke_cpps(int n, int k) {
    CppReport rep;
    rep.e_g = dicke_entanglement(n, k);
    rep.g_max = std::exp2(-rep.e_g / 2.0);
    if (k == 0 || k == n) {
        rep.cpps.push_back(k == 0 ? BlochPoint{0.0, 0.0} : BlochPoint{M_PI, 0.0});
        rep.local_maxima.emplace_back(rep.cpps[0], rep.g_max);
        return rep;
    }
    rep.continuous_ring = true;
    rep.ring_theta = 2.0 * std::asin(std::sqrt(double(k) / n));
    rep.cpps.push_back(BlochPoint{rep.ring_theta, 0.0});
    rep.local_maxima.emplace_back(rep.cpps[0], rep.g_max);
    return rep;
}

CppReport find_cpps(const SymmetricState& s, double grid_deg, double refine_tol) {
    if (grid_deg <= 0.0 || grid_deg > 5.0) throw Error("grid_deg must be in (0, 5]");
    const int n = s.n();
    const std::vector<cplx> w = overlap_weights(s);

    const int rows = std::max(2, static_cast<int>(std::ceil(180.0 / grid_deg)));
    const int cols = std::max(4, static_cast<int>(std::ceil(360.0 / grid_deg)));
    std::vector<cplx> ephi(cols);
    for (int j = 0; j < cols; ++j) ephi[j] = std::polar(1.0, 2.0 * M_PI * j / cols);

    // v[i][j] over theta rows 0..rows (poles are single-entry rows).
    std::vector<std::vector<double>> v(rows + 1);
    v[0].assign(1, std::abs(w[0]));
    v[rows].assign(1, std::abs(w[n]));
    for (int i = 1; i < rows; ++i) {
        const double theta = M_PI * i / rows;
        const double c = std::cos(theta / 2.0);
        const double sn = std::sin(theta / 2.0);
        std::vector<cplx> row(n + 1);
        for (int k = 0; k <= n; ++k)
            row[k] = w[k] * std::pow(c, n - k) * std::pow(sn, k);
        v[i].resize(cols);
        for (int j = 0; j < cols; ++j) {
            cplx acc(0.0, 0.0);
            for (int k = n; k >= 0; --k) acc = acc * ephi[j] + row[k];
            v[i][j] = std::abs(acc);
        }
    }

    auto value_at = [&](int i, int j) {
        if (i == 0) return v[0][0];
        if (i == rows) return v[rows][0];
        return v[i][(j % cols + cols) % cols];
    };

    std::vector<BlochPoint> seeds;
    if (v[0][0] >= *std::max_element(v[1].begin(), v[1].end()))
        seeds.push_back({0.0, 0.0});
    if (v[rows][0] >= *std::max_element(v[rows - 1].begin(), v[rows - 1].end()))
        seeds.push_back({M_PI, 0.0});
    for (int i = 1; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const double val = v[i][j];
            bool is_max = true;
            for (int di = -1; di <= 1 && is_max; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    if (value_at(i + di, j + dj) > val) {
                        is_max = false;
                        break;
                    }
                }
            if (is_max) seeds.push_back({M_PI * i / rows, 2.0 * M_PI * j / cols});
        }
    }

    const double step = std::max(0.5 * grid_deg * M_PI / 180.0, 1e-4);
    auto neg_g = [&](const std::vector<double>& x) {
        const BlochPoint p = BlochPoint{x[0], x[1]}.canonicalized();
        return -amplitude_from_weights(w, p.theta, p.phi);
    };

    std::vector<GridMax> found(seeds.size());
    parallel_for(seeds.size(), [&](std::size_t i) {
        const NelderMeadResult r =
            nelder_mead(neg_g, {seeds[i].theta, seeds[i].phi}, step, refine_tol, 500);
        found[i].p = BlochPoint{r.x[0], r.x[1]}.canonicalized();
        found[i].g = -r.value;
    });

    std::sort(found.begin(), found.end(), [](const GridMax& a, const GridMax& b) {
        if (a.g != b.g) return a.g > b.g;
        if (a.p.theta != b.p.theta) return a.p.theta < b.p.theta;
        return a.p.phi < b.p.phi;
    });
    std::vector<GridMax> kept;
    for (const auto& f : found) {
        bool dup = false;
        for (const auto& k : kept)
            if (chord(f.p, k.p) < 1e-6) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(f);
    }

    CppReport rep;
    if (kept.empty()) return rep;
    rep.g_max = kept[0].g;
    rep.e_g = -2.0 * std::log2(rep.g_max);
    for (const auto& k : kept) {
        rep.local_maxima.emplace_back(k.p, k.g);
        if (k.g >= rep.g_max * (1.0 - 1e-9)) rep.cpps.push_back(k.p);
    }
    std::sort(rep.cpps.begin(), rep.cpps.end(), [](const BlochPoint& a, const BlochPoint& b) {
        if (a.theta != b.theta) return a.theta < b.theta;
        return a.phi < b.phi;
    });
    if (static_cast<int>(rep.cpps.size()) > 4 * n) {
        double tmin = rep.cpps.front().theta, tmax = tmin, tsum = 0.0;
        for (const auto& p : rep.cpps) {
            tmin = std::min(tmin, p.theta);
            tmax = std::max(tmax, p.theta);
            tsum += p.theta;
        }
        if (tmax - tmin <= 1e-6) {
            rep.continuous_ring = true;
            rep.ring_theta = tsum / rep.cpps.size();
        }
    }
    return rep;
}

double entanglement(const SymmetricState& s) { return find_cpps(s).e_g; }

double integral_check(const SymmetricState& s, int quad_order) {
    return quadrature_g2(s, quad_order);
}

double volume_check(const SymmetricState& s, int quad_order) {
    return quadrature_g2(s, quad_order) / 3.0;
}

SphereSamples sample_sphere(const SymmetricState& s, SampleFunction f,
                            int theta_res, int phi_res) {
    if (theta_res < 2 || phi_res < 2) throw Error("resolution must be at least 2x2");
    SphereSamples out;
    out.thetas.resize(theta_res);
    out.phis.resize(phi_res);
    for (int i = 0; i < theta_res; ++i) out.thetas[i] = M_PI * i / (theta_res - 1);
    for (int j = 0; j < phi_res; ++j) out.phis[j] = 2.0 * M_PI * j / phi_res;
    const std::vector<cplx> w = overlap_weights(s);
    out.values.resize(static_cast<std::size_t>(theta_res) * phi_res);
    for (int i = 0; i < theta_res; ++i)
        for (int j = 0; j < phi_res; ++j) {
            const double g = amplitude_from_weights(w, out.thetas[i], out.phis[j]);
            const double g2 = g * g;
            out.values[static_cast<std::size_t>(i) * phi_res + j] =
                (f == SampleFunction::Amplitude2) ? g2 : std::cbrt(g2);
        }
    return out;
}

int rotational_structure(const SymmetricState& s, int* offset) {
    std::vector<int> idx;
    for (int k = 0; k <= s.n(); ++k)
        if (std::abs(s.coeffs[k]) > 1e-12) idx.push_back(k);
    if (idx.size() <= 1) {
        if (offset) *offset = idx.empty() ? 0 : idx[0];
        return 0;
    }
    int m = 0;
    for (std::size_t i = 1; i < idx.size(); ++i) m = std::gcd(m, idx[i] - idx[0]);
    if (offset) *offset = idx[0] % std::max(1, m);
    return m;
}

CppReport positive_cpp_search(const SymmetricState& s) {
    for (const auto& a : s.coeffs)
        if (std::abs(a.imag()) > 1e-12 || a.real() < -1e-12)
            throw NotPositive("coefficients must be real-nonnegative");

    int offset = 0;
    const int m = rotational_structure(s, &offset);
    if (m == 0) return dicke_cpps(s.n(), offset);

    const std::vector<cplx> w = overlap_weights(s);
    auto g_meridian = [&](double theta) { return amplitude_from_weights(w, theta, 0.0); };

    const int samples = 2048;
    std::vector<double> val(samples + 1);
    for (int i = 0; i <= samples; ++i) val[i] = g_meridian(M_PI * i / samples);

    std::vector<std::pair<double, double>> maxima; // (theta, g)
    for (int i = 0; i <= samples; ++i) {
        const double left = (i > 0) ? val[i - 1] : -1.0;
        const double right = (i < samples) ? val[i + 1] : -1.0;
        if (val[i] >= left && val[i] >= right) {
            const double a = M_PI * std::max(0, i - 1) / samples;
            const double b = M_PI * std::min(samples, i + 1) / samples;
            const double t =
                golden_section([&](double x) { return -g_meridian(x); }, a, b, 1e-14);
            maxima.emplace_back(t, g_meridian(t));
        }
    }
    std::sort(maxima.begin(), maxima.end(),
              [](const auto& a, const auto& b) { return a.second > b.second; });
    std::vector<std::pair<double, double>> kept;
    for (const auto& mx : maxima) {
        bool dup = false;
        for (const auto& k : kept)
            if (std::abs(mx.first - k.first) < 1e-8) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(mx);
    }

    CppReport rep;
    rep.g_max = kept.front().second;
    rep.e_g = -2.0 * std::log2(rep.g_max);
    for (const auto& k : kept) {
        // a quadratic maximum is only locatable to ~sqrt(eps) in theta, so the
        // pole test must be far looser than that
        const bool pole = k.first < 1e-6 || k.first > M_PI - 1e-6;
        const double theta = pole ? (k.first < 1e-6 ? 0.0 : M_PI) : k.first;
        const int copies = pole ? 1 : m;
        for (int r = 0; r < copies; ++r) {
            const BlochPoint p = BlochPoint{theta, 2.0 * M_PI * r / m}.canonicalized();
            rep.local_maxima.emplace_back(p, k.second);
            if (k.second >= rep.g_max * (1.0 - 1e-9)) rep.cpps.push_back(p);
        }
    }
    std::sort(rep.cpps.begin(), rep.cpps.end(), [](const BlochPoint& a, const BlochPoint& b) {
        if (a.theta != b.theta) return a.theta < b.theta;
        return a.phi < b.phi;
    });
    return rep;
}

double span_check(const SymmetricState& s, const CppReport& report) {
    if (report.cpps.empty()) throw EmptyCppSet("report has no CPPs");
    const int n = s.n();
    const int cols = static_cast<int>(report.cpps.size());
    Eigen::MatrixXcd A(n + 1, cols);
    for (int i = 0; i < cols; ++i) {
        const double c = std::cos(report.cpps[i].theta / 2.0);
        const double sn = std::sin(report.cpps[i].theta / 2.0);
        const cplx es = std::polar(sn, report.cpps[i].phi);
        cplx pw(1.0, 0.0);
        for (int k = 0; k <= n; ++k) {
            A(k, i) = sqrt_binomial(n, k) * std::pow(c, n - k) * pw;
            pw *= es;
        }
    }
    Eigen::VectorXcd b(n + 1);
    for (int k = 0; k <= n; ++k) b(k) = s.coeffs[k];
    const Eigen::VectorXcd x =
        A.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
    return (A * x - b).norm();
}

} // namespace symsphere
