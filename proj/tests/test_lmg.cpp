#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symsphere/errors.hpp"
#include "symsphere/geometric.hpp"
#include "symsphere/lmg.hpp"
#include "symsphere/rng.hpp"
#include "symsphere/symstate.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace symsphere;

namespace {

// Direct midpoint quadrature of the thermodynamic-limit product-overlap
// integral -(1/2pi) Int (1 + h cos t) log2((1 + cos(theta) cos t)/2) dt.
// The integrand is periodic and analytic, so the rule converges fast.
double log_amplitude_quadrature(double h, double theta, int nodes) {
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double t = 2.0 * M_PI * (i + 0.5) / nodes;
        sum += (1.0 + h * std::cos(t)) *
               std::log2(0.5 * (1.0 + std::cos(theta) * std::cos(t)));
    }
    return -sum / nodes;
}

double density_integral(double h, int nodes) {
    const double lim = h <= 1.0 ? M_PI : std::acos((h - 2.0) / h);
    double sum = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double t = -lim + 2.0 * lim * (i + 0.5) / nodes;
        sum += mp_density(h, t);
    }
    return sum * 2.0 * lim / nodes;
}

// Strict sign alternations of q(w) = sum_j sqrt(binom(n,2j)) a_{2j} w^j along
// a dense geometric mesh of the negative real axis.  For an even-parity state
// the Majorana polynomial is q(z^2) up to sign conventions, so a count equal
// to deg q proves every root of q real and negative, i.e. every Majorana
// point exactly on the imaginary great circle.
int negative_axis_sign_flips(const SymmetricState& g) {
    const int n = g.n();
    std::vector<long double> q;
    for (int k = 0; k <= n; k += 2) {
        long double lb = 0.0L;
        for (int i = 1; i <= k; ++i)
            lb += 0.5L * (std::log(static_cast<long double>(n - k + i)) -
                          std::log(static_cast<long double>(i)));
        q.push_back(std::exp(lb) * static_cast<long double>(g.coeffs[k].real()));
    }
    int flips = 0, prev = 0;
    const int mesh = 300000;
    for (int i = 0; i <= mesh; ++i) {
        const long double w = -std::pow(10.0L, 10.0L - 20.0L * i / mesh);
        long double v = q.back();
        for (size_t j = q.size() - 1; j-- > 0;) v = v * w + q[j];
        if (v == 0.0L) continue;
        const int sg = v > 0.0L ? 1 : -1;
        if (prev != 0 && sg != prev) ++flips;
        prev = sg;
    }
    return flips;
}

} // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ground_state(LmgParams{1, 1.0, 0.0}), OutOfRange);
    CHECK_THROWS_AS(ground_state(LmgParams{4, 0.0, 0.0}), OutOfRange);
    CHECK_THROWS_AS(ground_state(LmgParams{4, -1.0, 0.0}), OutOfRange);
    CHECK_THROWS_AS(ground_state(LmgParams{4, 1.0, -0.5}), OutOfRange);
    CHECK_THROWS_AS(mp_density(-0.1, 0.0), OutOfRange);
    CHECK_THROWS_AS(cpp_latitude(-1.0), OutOfRange);
    CHECK_THROWS_AS(log_amplitude_broken(1.5, 0.3), OutOfRange);
}

TEST_CASE("spin-1 zero-field ground state against the 3x3 hand eigenproblem") {
    // H = -S_y^2/2 in the rephased m = {1, 0, -1} basis is
    //   [[-1/4, 0, -1/4], [0, -1/2, 0], [-1/4, 0, -1/4]]
    // with ground energy -1/2, doubly degenerate (S_y = +-1 sector), and the
    // excluded S_y = 0 direction reading (1, 0, -1) in this gauge.
    const SymmetricState g = ground_state(LmgParams{2, 1.0, 0.0});
    REQUIRE(g.coeffs.size() == 3);

    const double hmat[3][3] = {{-0.25, 0.0, -0.25}, {0.0, -0.5, 0.0}, {-0.25, 0.0, -0.25}};
    cplx energy(0.0, 0.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            energy += std::conj(g.coeffs[i]) * hmat[i][j] * g.coeffs[j];
    CHECK(energy.real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(std::abs(energy.imag()) < 1e-15);

    const cplx overlap_sy0 = (g.coeffs[0] - g.coeffs[2]) / std::sqrt(2.0);
    CHECK(std::abs(overlap_sy0) < 1e-10);
}

TEST_CASE("strong field polarizes the ground state") {
    const SymmetricState g = ground_state(LmgParams{10, 1.0, 100.0});
    SymmetricState aligned(std::vector<cplx>(11, cplx(0.0, 0.0)));
    aligned.coeffs[0] = 1.0;
    CHECK(fidelity(g, aligned) > 0.999);
}

TEST_CASE("coefficient parity and reality across the sweep") {
    for (int two_s : {4, 10, 30, 60}) {
        for (double h : {0.3, 1.0, 2.0}) {
            CAPTURE(two_s);
            CAPTURE(h);
            const SymmetricState g = ground_state(LmgParams{two_s, 1.0, h});
            double norm = 0.0;
            for (size_t k = 0; k < g.coeffs.size(); ++k) {
                norm += std::norm(g.coeffs[k]);
                if (k % 2 == 1) {
                    CHECK(std::abs(g.coeffs[k]) < 1e-10);
                } else {
                    CHECK(std::abs(g.coeffs[k].imag()) < 1e-12);
                }
            }
            CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("Majorana points stay on the imaginary great circle") {
    for (int two_s : {4, 10, 30, 60}) {
        for (double h : {0.3, 1.0, 2.0}) {
            CAPTURE(two_s);
            CAPTURE(h);
            const SymmetricState g = ground_state(LmgParams{two_s, 1.0, h});

            // direct check on the extracted points
            for (const auto& p : state_to_mps(g).points) {
                if (p.theta < 1e-9 || p.theta > M_PI - 1e-9) continue;
                const double d = std::min(std::abs(p.phi - 0.5 * M_PI),
                                          std::abs(p.phi - 1.5 * M_PI));
                CAPTURE(p.theta);
                CAPTURE(p.phi);
                CHECK(d <= 1e-5);
            }

            // exactness certificate: the ground state has even parity, so
            // its Majorana polynomial is a polynomial in w = z^2, and all
            // Majorana points lie on the imaginary great circle exactly
            // when that polynomial has its full count of negative real
            // roots, which is stronger than any angular tolerance
            for (size_t k = 0; k < g.coeffs.size(); k += 2)
                CHECK(g.coeffs[k].real() > 0.0); // nodeless in this gauge
            CHECK(negative_axis_sign_flips(g) == two_s / 2);
        }
    }
}

TEST_CASE("Majorana density: closed support, symmetry and normalization") {
    CHECK(mp_density(0.0, 0.4) == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-14));
    CHECK(mp_density(0.0, -2.9) == doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-14));
    CHECK(mp_density(1.0, M_PI) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(mp_density(0.7, 1.1) == doctest::Approx(mp_density(0.7, -1.1)).epsilon(1e-14));
    CHECK(mp_density(2.0, 1.2) == doctest::Approx(mp_density(2.0, -1.2)).epsilon(1e-14));

    // the two branches agree at the transition
    CHECK(mp_density(1.0, 0.8) ==
          doctest::Approx(std::sqrt(1.0 * (1.0 + std::cos(0.8)) * (1.0 + std::cos(0.8))) /
                          (2.0 * M_PI))
              .epsilon(1e-12));

    CHECK_THROWS_AS(mp_density(2.0, 1.8), OutOfSupport);
    CHECK_THROWS_AS(mp_density(1.5, 3.0), OutOfSupport);
    CHECK_NOTHROW(mp_density(2.0, 1.5));

    for (double h : {0.5, 1.0, 2.0}) {
        CAPTURE(h);
        CHECK(density_integral(h, 1 << 20) == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("broken-phase log amplitude: closed form vs quadrature") {
    CHECK(log_amplitude_broken(0.0, 0.5 * M_PI) == doctest::Approx(1.0).epsilon(1e-14));

    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        const double h = rng.uniform(0.0, 1.0);
        const double theta = rng.uniform(0.15, M_PI - 0.15);
        CAPTURE(h);
        CAPTURE(theta);
        CHECK(std::abs(log_amplitude_broken(h, theta) -
                       log_amplitude_quadrature(h, theta, 4096)) < 1e-8);
    }

    // the stationary point sits at cos(theta) = h; the log amplitude is a
    // negative log of the product overlap, so the CPP minimizes it
    for (double h : {0.2, 0.5, 0.9}) {
        const double th = std::acos(h);
        const double d = 1e-5;
        const double slope =
            (log_amplitude_broken(h, th + d) - log_amplitude_broken(h, th - d)) / (2.0 * d);
        CHECK(std::abs(slope) < 1e-6);
        CHECK(log_amplitude_broken(h, th) < log_amplitude_broken(h, th + 0.1));
        CHECK(log_amplitude_broken(h, th) < log_amplitude_broken(h, th - 0.1));
    }
}

TEST_CASE("continuum CPP latitude") {
    CHECK(cpp_latitude(0.0) == doctest::Approx(0.5 * M_PI).epsilon(1e-14));
    CHECK(cpp_latitude(0.5) == doctest::Approx(std::acos(0.5)).epsilon(1e-14));
    CHECK(cpp_latitude(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(cpp_latitude(2.0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("finite-size CPP latitude converges to the continuum") {
    const double target = std::acos(0.5);
    std::vector<double> err;
    for (int two_s : {20, 40, 60}) {
        const SymmetricState g = ground_state(LmgParams{two_s, 1.0, 0.5});
        const CppReport r = find_cpps(g, 1.0);
        REQUIRE(!r.cpps.empty());
        const double th = r.cpps[0].theta;
        for (const auto& p : r.cpps) CHECK(p.theta == doctest::Approx(th).epsilon(1e-6));
        err.push_back(std::abs(th - target));
    }
    CHECK(err[2] < 0.1);
    CHECK(err[1] < err[0]);
    CHECK(err[2] < err[1]);
}

TEST_CASE("half-integer spin works") {
    const SymmetricState g = ground_state(LmgParams{3, 1.0, 0.3});
    CHECK(g.n() == 3);
    double norm = 0.0;
    for (const auto& c : g.coeffs) norm += std::norm(c);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
}
