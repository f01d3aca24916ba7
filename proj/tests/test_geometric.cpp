#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "symsphere/geometric.hpp"
#include "symsphere/rng.hpp"
#include "symsphere/symstate.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace symsphere;

namespace {

SymmetricState make_state(std::vector<cplx> a) { return normalize(SymmetricState{std::move(a)}); }

SymmetricState random_state(Rng& rng, int n) {
    std::vector<cplx> a(n + 1);
    for (auto& x : a) x = cplx(rng.normal(), rng.normal());
    return make_state(std::move(a));
}

SymmetricState dicke(int n, int k) {
    std::vector<cplx> a(n + 1, cplx(0.0, 0.0));
    a[k] = 1.0;
    return SymmetricState{std::move(a)};
}

SymmetricState ghz(int n) {
    std::vector<cplx> a(n + 1, cplx(0.0, 0.0));
    a[0] = a[n] = 1.0 / std::sqrt(2.0);
    return SymmetricState{std::move(a)};
}

SymmetricState tetrahedron_state() {
    return make_state({std::sqrt(1.0 / 3.0), 0.0, 0.0, std::sqrt(2.0 / 3.0), 0.0});
}

SymmetricState octahedron_state() {
    return make_state({0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0});
}

bool contains_point(const std::vector<BlochPoint>& pts, const BlochPoint& p, double tol) {
    for (const auto& q : pts)
        if (chord(p, q) < tol) return true;
    return false;
}

} // namespace

TEST_CASE("amplitude examples") {
    CHECK(amplitude(dicke(6, 0), {0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(amplitude(normalize(ghz(3)), {0.0, 0.0}) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(amplitude(dicke(6, 0), {M_PI, 0.0}) == doctest::Approx(0.0));

    // the amplitude vanishes at the antipode of any Majorana point
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const SymmetricState s = random_state(rng, 7);
        for (const auto& p : state_to_mps(s).points) {
            const BlochPoint anti = BlochPoint{M_PI - p.theta, p.phi + M_PI}.canonicalized();
            CHECK(amplitude(s, anti) <= 1e-6);
        }
    }

    // Dicke amplitude peaks on the predicted ring
    const int n = 8, k = 3;
    const double theta_star = 2.0 * std::asin(std::sqrt(double(k) / n));
    const double g_ring = amplitude(dicke(n, k), {theta_star, 1.3});
    CHECK(g_ring > amplitude(dicke(n, k), {theta_star + 0.05, 1.3}));
    CHECK(g_ring > amplitude(dicke(n, k), {theta_star - 0.05, 1.3}));
    const double expected =
        std::sqrt(binomial(n, k) * std::pow(double(k) / n, k) *
                  std::pow(double(n - k) / n, n - k));
    CHECK(g_ring == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("find_cpps on pole states") {
    for (const int n : {3, 6, 10}) {
        const CppReport rep = find_cpps(normalize(ghz(n)), 2.0);
        CHECK(rep.e_g == doctest::Approx(1.0).epsilon(1e-9));
        REQUIRE(rep.cpps.size() == 2);
        CHECK(rep.cpps[0].theta == doctest::Approx(0.0).epsilon(1e-7));
        CHECK(rep.cpps[1].theta == doctest::Approx(M_PI).epsilon(1e-7));
    }
}

TEST_CASE("find_cpps tetrahedron") {
    const CppReport rep = find_cpps(tetrahedron_state(), 2.0);
    CHECK(rep.e_g == doctest::Approx(std::log2(3.0)).epsilon(1e-9));
    REQUIRE(rep.cpps.size() == 4);
    const double t = 2.0 * std::acos(1.0 / std::sqrt(3.0));
    CHECK(contains_point(rep.cpps, {0.0, 0.0}, 1e-6));
    for (int r = 0; r < 3; ++r)
        CHECK(contains_point(rep.cpps, {t, 2.0 * M_PI * r / 3.0}, 1e-6));
    CHECK_FALSE(rep.continuous_ring);
}

TEST_CASE("find_cpps octahedron") {
    const CppReport rep = find_cpps(octahedron_state(), 2.0);
    CHECK(rep.e_g == doctest::Approx(std::log2(4.5)).epsilon(1e-9));
    REQUIRE(rep.cpps.size() == 8);
    // cube vertices: cos^2(theta/2) = (sqrt(3)+1)/(2 sqrt(3))
    const double c2 = (std::sqrt(3.0) + 1.0) / (2.0 * std::sqrt(3.0));
    const double theta_hi = 2.0 * std::acos(std::sqrt(c2));
    for (int r = 0; r < 4; ++r) {
        CHECK(contains_point(rep.cpps, {theta_hi, M_PI_2 * r}, 1e-6));
        CHECK(contains_point(rep.cpps, {M_PI - theta_hi, M_PI_2 * r}, 1e-6));
    }
}

TEST_CASE("dicke entanglement closed form") {
    CHECK(dicke_entanglement(3, 1) == doctest::Approx(std::log2(9.0 / 4.0)).epsilon(1e-14));
    CHECK(dicke_entanglement(4, 2) == doctest::Approx(std::log2(8.0 / 3.0)).epsilon(1e-14));
    CHECK(dicke_entanglement(6, 0) == 0.0);
    CHECK(dicke_entanglement(6, 6) == 0.0);
    CHECK(dicke_entanglement(9, 4) == dicke_entanglement(9, 5));

    // matches the grid search
    const CppReport rep = find_cpps(dicke(5, 2), 1.0);
    CHECK(rep.e_g == doctest::Approx(dicke_entanglement(5, 2)).epsilon(1e-8));
    CHECK(rep.continuous_ring);
    CHECK(rep.ring_theta == doctest::Approx(2.0 * std::asin(std::sqrt(2.0 / 5.0))).epsilon(1e-5));
}

TEST_CASE("dicke_cpps") {
    const CppReport north = dicke_cpps(7, 0);
    CHECK_FALSE(north.continuous_ring);
    REQUIRE(north.cpps.size() == 1);
    CHECK(north.cpps[0].theta == 0.0);
    CHECK(north.e_g == 0.0);

    const CppReport ring = dicke_cpps(7, 3);
    CHECK(ring.continuous_ring);
    CHECK(ring.ring_theta == doctest::Approx(2.0 * std::asin(std::sqrt(3.0 / 7.0))));
    CHECK(ring.e_g == doctest::Approx(dicke_entanglement(7, 3)));
    CHECK(ring.g_max == doctest::Approx(std::exp2(-ring.e_g / 2.0)));
}

TEST_CASE("amplitude-squared integral") {
    // closed form: integral of g^2 over the sphere is 4 pi / (n + 1)
    CHECK(integral_check(normalize(ghz(3))) == doctest::Approx(M_PI).epsilon(1e-10));
    CHECK(integral_check(dicke(1, 0)) == doctest::Approx(2.0 * M_PI).epsilon(1e-12));

    Rng rng(7);
    for (int n = 2; n <= 12; ++n) {
        const SymmetricState s = random_state(rng, n);
        CHECK(integral_check(s) == doctest::Approx(4.0 * M_PI / (n + 1)).epsilon(1e-8));
    }
}

TEST_CASE("enclosed volume") {
    CHECK(volume_check(tetrahedron_state()) == doctest::Approx(4.0 * M_PI / 15.0).epsilon(1e-8));
    CHECK(volume_check(dicke(1, 0)) == doctest::Approx(2.0 * M_PI / 3.0).epsilon(1e-10));
    Rng rng(9);
    const SymmetricState s = random_state(rng, 12);
    CHECK(volume_check(s) == doctest::Approx(4.0 * M_PI / 39.0).epsilon(1e-8));
}

TEST_CASE("sample_sphere grids") {
    const SphereSamples amp = sample_sphere(dicke(1, 0), SampleFunction::Amplitude2, 3, 4);
    REQUIRE(amp.thetas.size() == 3);
    REQUIRE(amp.phis.size() == 4);
    REQUIRE(amp.values.size() == 12);
    for (int j = 0; j < 4; ++j) {
        CHECK(amp.values[0 * 4 + j] == doctest::Approx(1.0));   // north row
        CHECK(amp.values[2 * 4 + j] == doctest::Approx(0.0));   // south row
        CHECK(amp.values[1 * 4 + j] == doctest::Approx(0.5));   // equator, g^2 = cos^2(pi/4)
    }

    const SphereSamples gpole = sample_sphere(normalize(ghz(3)), SampleFunction::Amplitude2, 2, 2);
    CHECK(gpole.values[0] == doctest::Approx(0.5));

    const SphereSamples vol = sample_sphere(tetrahedron_state(), SampleFunction::Volume, 5, 6);
    CHECK(vol.values[0 * 6 + 0] == doctest::Approx(std::cbrt(1.0 / 3.0)).epsilon(1e-10));

    CHECK_THROWS_AS(sample_sphere(dicke(1, 0), SampleFunction::Amplitude2, 1, 4), Error);
}

TEST_CASE("rotational_structure") {
    int offset = -1;
    CHECK(rotational_structure(normalize(ghz(4)), &offset) == 4);
    CHECK(offset == 0);
    CHECK(rotational_structure(tetrahedron_state(), &offset) == 3);
    CHECK(rotational_structure(dicke(6, 2), &offset) == 0);
    CHECK(offset == 2);
    CHECK(rotational_structure(make_state({1.0, 1.0, 0.5, 0.0, 0.0}), nullptr) == 1);
}

TEST_CASE("positive_cpp_search") {
    const CppReport g4 = positive_cpp_search(normalize(ghz(4)));
    REQUIRE(g4.cpps.size() == 2);
    CHECK(g4.e_g == doctest::Approx(1.0).epsilon(1e-9));

    const CppReport ring = positive_cpp_search(dicke(6, 2));
    CHECK(ring.continuous_ring);
    CHECK(ring.e_g == doctest::Approx(dicke_entanglement(6, 2)).epsilon(1e-10));

    const CppReport tet = positive_cpp_search(tetrahedron_state());
    REQUIRE(tet.cpps.size() == 4);
    CHECK(tet.e_g == doctest::Approx(std::log2(3.0)).epsilon(1e-10));

    CHECK_THROWS_AS(positive_cpp_search(make_state({1.0, cplx(0.0, 1.0), 1.0})), NotPositive);
    CHECK_THROWS_AS(positive_cpp_search(make_state({1.0, 1.0, -1.0})), NotPositive);

    // pentagonal dipyramid: ring latitude satisfies 49 x^3 + 165 x^2 - 205 x + 55 = 0
    const SymmetricState pd = make_state({0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0});
    const CppReport rep = positive_cpp_search(pd);
    REQUIRE(rep.cpps.size() == 10);
    double c2 = -1.0;
    for (const auto& p : rep.cpps)
        if (p.theta < M_PI_2) c2 = std::cos(p.theta / 2.0) * std::cos(p.theta / 2.0);
    const double x = (2.0 * c2 - 1.0) * (2.0 * c2 - 1.0); // cos^2(theta)
    const double poly = 49.0 * x * x * x + 165.0 * x * x - 205.0 * x + 55.0;
    CHECK(std::abs(poly) < 1e-5);
    // cross-check the full grid search finds the same structure
    const CppReport grid = find_cpps(pd, 2.0);
    CHECK(grid.e_g == doctest::Approx(rep.e_g).epsilon(1e-8));
    CHECK(grid.cpps.size() == 10);
}

TEST_CASE("span_check") {
    const CppReport g3 = find_cpps(normalize(ghz(3)), 2.0);
    CHECK(span_check(normalize(ghz(3)), g3) < 1e-6);

    // W_3 is maximally entangled among 3-qubit symmetric states; its CPP ring
    // spans the state (use four points on the ring)
    const SymmetricState w3 = dicke(3, 1);
    CppReport ring = dicke_cpps(3, 1);
    const double t = ring.ring_theta;
    ring.cpps = {{t, 0.0}, {t, M_PI_2}, {t, M_PI}, {t, 3.0 * M_PI_2}};
    CHECK(span_check(w3, ring) < 1e-6);

    // product state: single CPP spans it
    const CppReport prod = find_cpps(dicke(4, 0), 2.0);
    CHECK(span_check(dicke(4, 0), prod) < 1e-6);

    // maximally entangled candidate: tetrahedron CPPs span the state (4 points in C^5)
    const SymmetricState tetra = tetrahedron_state();
    CHECK(span_check(tetra, find_cpps(tetra, 2.0)) < 1e-6);

    // a lopsided two-Dicke state has a single CPP at the north pole, which
    // cannot span the S_4 component
    const SymmetricState lop = make_state({0.9, 0.0, 0.0, 0.0, std::sqrt(0.19)});
    const CppReport lrep = find_cpps(lop, 2.0);
    REQUIRE(lrep.cpps.size() == 1);
    CHECK(span_check(lop, lrep) > 0.1);

    CppReport empty;
    CHECK_THROWS_AS(span_check(w3, empty), EmptyCppSet);
}

TEST_CASE("entanglement bounds and invariance") {
    Rng rng(13);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 3 + int(rng.uniform01() * 6.0);
        const SymmetricState s = random_state(rng, n);
        const double e = find_cpps(s, 2.0).e_g;
        CHECK(e <= std::log2(n + 1.0) + 1e-12);
        CHECK(e >= -1e-12);

        double x, y, z;
        rng.unit_vector(x, y, z);
        const SymmetricState rot = apply_su2(s, Mat2::rotation(rng.uniform(0.0, 6.28), x, y, z));
        CHECK(find_cpps(rot, 2.0).e_g == doctest::Approx(e).epsilon(1e-6));
    }
}

TEST_CASE("dephasing dominance") {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4 + int(rng.uniform01() * 5.0);
        const SymmetricState s = random_state(rng, n);
        std::vector<cplx> mags(n + 1);
        for (int k = 0; k <= n; ++k) mags[k] = std::abs(s.coeffs[k]);
        const SymmetricState dephased = make_state(std::move(mags));
        CHECK(find_cpps(dephased, 2.0).e_g <= find_cpps(s, 2.0).e_g + 1e-6);
    }
}

TEST_CASE("three-qubit positive family latitude law") {
    // state sqrt(3) cos(t)^2 S_0 + sin(t)^2 S_2 (unnormalized), Majorana points
    // {north, cos|0> +- i sin|1>}; for t past arccos(-1/5) the CPP latitude obeys
    // cos^2(theta/2) = sin^2(t) / (6 sin^2(t) - 3)
    for (double t = 2.0; t <= 3.0; t += 0.2) {
        const double c = std::cos(t / 2.0), s = std::sin(t / 2.0);
        const double ct = std::cos(t);
        if (ct > -1.0 / 5.0 + 1e-9) continue;
        const SymmetricState psi =
            make_state({std::sqrt(3.0) * c * c, 0.0, s * s, 0.0});
        const MPDistribution mps = state_to_mps(psi);
        CHECK(contains_point(mps.points, {0.0, 0.0}, 1e-7));
        const CppReport rep = positive_cpp_search(psi);
        const double s2 = s * s;
        const double expect_c2 = s2 / (6.0 * s2 - 3.0);
        bool found = false;
        for (const auto& p : rep.cpps) {
            const double c2 = std::cos(p.theta / 2.0) * std::cos(p.theta / 2.0);
            if (std::abs(c2 - expect_c2) < 1e-6) found = true;
        }
        CHECK(found);
    }
}
