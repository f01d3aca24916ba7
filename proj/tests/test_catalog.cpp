#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symsphere/catalog.hpp"
#include "symsphere/classical.hpp"
#include "symsphere/errors.hpp"
#include "symsphere/geometric.hpp"
#include "symsphere/optim.hpp"
#include "symsphere/slocc.hpp"
#include "symsphere/symstate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

using namespace symsphere;

namespace {

// Derivative along the phi = 0 meridian of the unnormalized product overlap
// u(theta) = sum_k a_k sqrt(binom(n,k)) cos^{n-k}(theta/2) sin^k(theta/2)
// for a state with real coefficients.  Ring CPPs of such states must be
// stationary points of u.
double meridian_derivative(const SymmetricState& s, double theta) {
    const int n = s.n();
    const double c = std::cos(0.5 * theta), t = std::sin(0.5 * theta);
    double d = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double a = s.coeffs[static_cast<size_t>(k)].real();
        if (a == 0.0) continue;
        const double cf = k >= 1 ? std::pow(c, n - k + 1) * std::pow(t, k - 1) * k : 0.0;
        const double sf = k <= n - 1
                              ? std::pow(c, n - k - 1) * std::pow(t, k + 1) * (n - k)
                              : 0.0;
        d += 0.5 * a * sqrt_binomial(n, k) * (cf - sf);
    }
    return d;
}

PointSet to_pointset(const std::vector<BlochPoint>& pts) {
    PointSet ps;
    for (const auto& p : pts) ps.points.push_back(p.unit());
    return ps;
}

// One-to-one chordal matching of two point lists within tol.
bool points_match(const std::vector<BlochPoint>& a, const std::vector<BlochPoint>& b,
                  double tol) {
    if (a.size() != b.size()) return false;
    std::vector<char> used(b.size(), 0);
    for (const auto& p : a) {
        int best = -1;
        double bd = 4.0;
        for (size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = chord(p, b[j]);
            if (d < bd) {
                bd = d;
                best = static_cast<int>(j);
            }
        }
        if (best < 0 || bd > tol) return false;
        used[static_cast<size_t>(best)] = 1;
    }
    return true;
}

double middle_ratio(const CatalogEntry& e, int k) {
    return (e.state.coeffs[static_cast<size_t>(k)] / e.state.coeffs[0]).real();
}

} // namespace

TEST_CASE("name parsing and parameter validation") {
    CHECK_THROWS_AS(named_state("no_such_state"), UnknownName);
    CHECK_THROWS_AS(named_state("ghz(3"), UnknownName);
    CHECK_THROWS_AS(named_state("ghz(a)"), UnknownName);
    CHECK_THROWS_AS(named_state("ghz"), MissingParameter);
    CHECK_THROWS_AS(named_state("dicke(5)"), MissingParameter);
    CHECK_THROWS_AS(named_state("cluster4_equiv_fixture"), MissingParameter);
    CHECK_THROWS_AS(named_state("ghz(1)"), OutOfRange);
    CHECK_THROWS_AS(named_state("ghz(2.5)"), OutOfRange);
    CHECK_THROWS_AS(named_state("dicke(4,7)"), OutOfRange);
    CHECK_THROWS_AS(named_state("dicke(4,-1)"), OutOfRange);
    CHECK_THROWS_AS(named_state("x_state(2)"), OutOfRange);
    CHECK_THROWS_AS(named_state("cluster4_equiv_fixture(13)"), OutOfRange);
    CHECK_THROWS_AS(named_state("cluster4_equiv_fixture(0)"), OutOfRange);
    CHECK_THROWS_AS(named_state("antiprism_8(-1.0)"), OutOfRange);
    CHECK_THROWS_AS(named_state("gyro_bipyramid_10(2.0)"), OutOfRange);
    CHECK_THROWS_AS(named_state("tetrahedron(3)"), OutOfRange);
    CHECK_THROWS_AS(named_state("ghz(3,4)"), OutOfRange);

    CHECK(named_state("dicke(5,2)").name == "dicke(5,2)");
    CHECK(named_state(" dicke ( 5 , 2 ) ").name == "dicke(5,2)");
    CHECK(named_state("dicke", 5, 2).name == "dicke(5,2)");
    // explicit arguments win over embedded ones
    CHECK(named_state("ghz(3)", 5).n == 5);
    CHECK(fidelity(named_state("w(4)").state, named_state("dicke(4,1)").state) ==
          doctest::Approx(1.0).epsilon(1e-12));

    const auto names = catalog_names();
    CHECK(names.size() == 24);
    CHECK(std::find(names.begin(), names.end(), "icosahedron") != names.end());
}

TEST_CASE("closed-form reference entanglements") {
    CHECK(named_state("ghz(7)").e_g_reference == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(named_state("tetrahedron").e_g_reference ==
          doctest::Approx(std::log2(3.0)).epsilon(1e-12));
    CHECK(named_state("trigonal_bipyramid").e_g_reference ==
          doctest::Approx(std::log2(16.0 / 5.0)).epsilon(1e-12));
    CHECK(named_state("octahedron").e_g_reference ==
          doctest::Approx(std::log2(9.0 / 2.0)).epsilon(1e-12));
    CHECK(named_state("cube").e_g_reference ==
          doctest::Approx(std::log2(24.0 / 5.0)).epsilon(1e-12));
    CHECK(named_state("rot_pos_10").e_g_reference ==
          doctest::Approx(std::log2(32.0 / 5.0)).epsilon(1e-12));
    CHECK(named_state("icosahedron").e_g_reference ==
          doctest::Approx(std::log2(243.0 / 28.0)).epsilon(1e-12));
    CHECK(named_state("dodecahedron").e_g_reference ==
          doctest::Approx(std::log2(1875.0 / 187.0)).epsilon(1e-12));
    CHECK(named_state("toth_11").e_g_reference ==
          doctest::Approx(std::log2(625.0 / 462.0)).epsilon(1e-12));
    CHECK(named_state("triaugmented_prism_9").e_g_reference ==
          doctest::Approx(std::log2((213.0 + 16.0 * std::sqrt(2.0)) / 42.0)).epsilon(1e-12));
    CHECK(named_state("dicke(4,2)").e_g_reference ==
          doctest::Approx(std::log2(8.0 / 3.0)).epsilon(1e-12));
    CHECK(named_state("w(3)").e_g_reference ==
          doctest::Approx(std::log2(9.0 / 4.0)).epsilon(1e-12));

    // solved-constant entries against their published truncated decimals
    CHECK(std::abs(named_state("square_pyramid").e_g_reference - 1.742268948) < 1e-9);
    CHECK(std::abs(named_state("pentagonal_dipyramid_7").e_g_reference - 2.298691396) < 1e-9);
    CHECK(std::abs(named_state("nine_max").e_g_reference - 2.553960277) < 1e-9);
    CHECK(std::abs(named_state("antiprism_8").e_g_reference - 2.436587205) < 1e-9);
}

TEST_CASE("ring latitudes satisfy the meridian stationarity and their "
          "defining polynomials") {
    // square pyramid: ring spinor component x = cos(theta/2) is a root of
    // 4x^4 + 4x^3 + 4x^2 - x - 1 and the middle coefficient follows from it
    const CatalogEntry sq = named_state("square_pyramid");
    REQUIRE(sq.reference_cpps.size() == 5);
    const double xs = std::cos(0.5 * sq.reference_cpps[1].theta);
    CHECK(std::abs(((4.0 * xs + 4.0) * xs + 4.0) * xs * xs - xs - 1.0) < 1e-10);
    CHECK(middle_ratio(sq, 4) ==
          doctest::Approx(std::sqrt(5.0) / (4.0 * xs * (1.0 - xs * xs))).epsilon(1e-10));
    CHECK(std::abs(meridian_derivative(sq.state, sq.reference_cpps[1].theta)) < 1e-12);
    CHECK(amplitude(sq.state, sq.reference_cpps[1]) ==
          doctest::Approx(std::exp2(-0.5 * sq.e_g_reference)).epsilon(1e-12));

    // pentagonal dipyramid on 7 qubits: cos^2(theta) is a root of
    // 49x^3 + 165x^2 - 205x + 55
    const CatalogEntry p7 = named_state("pentagonal_dipyramid_7");
    const double c7 = std::cos(p7.reference_cpps[0].theta);
    CHECK(std::abs(((49.0 * c7 * c7 + 165.0) * c7 * c7 - 205.0) * c7 * c7 + 55.0) < 1e-9);
    CHECK(std::abs(meridian_derivative(p7.state, p7.reference_cpps[0].theta)) < 1e-12);

    // nine-qubit maximum: cos^2(theta) is a root of 81x^3 + 385x^2 - 245x + 35
    const CatalogEntry n9 = named_state("nine_max");
    const double c9 = std::cos(n9.reference_cpps[0].theta);
    CHECK(std::abs(((81.0 * c9 * c9 + 385.0) * c9 * c9 - 245.0) * c9 * c9 + 35.0) < 1e-9);
    CHECK(std::abs(meridian_derivative(n9.state, n9.reference_cpps[0].theta)) < 1e-12);

    // antiprism: ring CPPs are stationary on the aligned meridian and tie
    // the poles exactly at the family optimum
    const CatalogEntry ap = named_state("antiprism_8");
    const double tha = ap.reference_cpps[2].theta;
    CHECK(std::abs(meridian_derivative(ap.state, tha)) < 1e-12);
    CHECK(amplitude(ap.state, ap.reference_cpps[2]) ==
          doctest::Approx(amplitude(ap.state, BlochPoint(0.0, 0.0))).epsilon(1e-10));

    // trigonal bipyramid and triaugmented prism peak on the equator
    CHECK(std::abs(meridian_derivative(named_state("trigonal_bipyramid").state,
                                       0.5 * M_PI)) < 1e-12);
    CHECK(std::abs(meridian_derivative(named_state("triaugmented_prism_9").state,
                                       0.5 * M_PI)) < 1e-12);
}

TEST_CASE("every tabulated entry passes its own verification") {
    const std::vector<std::string> names = {
        "ghz(2)", "ghz(3)", "ghz(4)", "ghz(6)", "w(3)", "w(4)", "dicke(2,1)",
        "dicke(4,2)", "dicke(5,0)", "dicke(6,6)", "dicke(7,3)",
        "tetrahedron", "trigonal_bipyramid", "square_pyramid", "octahedron",
        "pentagonal_dipyramid_7", "cube", "asym_pentagonal_dipyramid_8",
        "antiprism_8", "nine_max", "triaugmented_prism_9", "gyro_bipyramid_10",
        "ten_pos", "rot_pos_10", "eleven_max", "eleven_pos", "icosahedron",
        "twelve_pos", "dodecahedron", "x_state(3)", "x_state(4)", "x_state(6)",
        "toth_11",
        "cluster4_equiv_fixture(1)", "cluster4_equiv_fixture(2)",
        "cluster4_equiv_fixture(3)", "cluster4_equiv_fixture(4)",
        "cluster4_equiv_fixture(5)", "cluster4_equiv_fixture(6)",
        "cluster4_equiv_fixture(7)", "cluster4_equiv_fixture(8)",
        "cluster4_equiv_fixture(9)", "cluster4_equiv_fixture(10)",
        "cluster4_equiv_fixture(11)", "cluster4_equiv_fixture(12)",
    };
    for (const auto& nm : names) {
        CAPTURE(nm);
        const CatalogEntry e = named_state(nm);
        const VerifyReport rep = verify_entry(e);
        for (const auto& item : rep.items) {
            CAPTURE(item.field);
            CAPTURE(item.detail);
            CHECK(item.pass);
        }
    }
}

TEST_CASE("local-unitary anchors of the equivalence fixtures") {
    for (int i = 1; i <= 12; ++i) {
        CAPTURE(i);
        const CatalogEntry e = named_state("cluster4_equiv_fixture", i);
        const char* anchor = i <= 4 ? "ghz(3)" : i <= 7 ? "tetrahedron" : "octahedron";
        const EquivalenceVerdict v = lu_equivalence(e.state, named_state(anchor).state);
        CHECK(v.relation == Relation::LuEquivalent);
    }
    // the reversed-coefficient tetrahedron appears in the x_state family
    CHECK(lu_equivalence(named_state("x_state(4)").state,
                         named_state("tetrahedron").state)
              .relation == Relation::LuEquivalent);
}

TEST_CASE("dual polyhedra swap Majorana points and closest product points") {
    const CatalogEntry ico = named_state("icosahedron");
    const CatalogEntry dod = named_state("dodecahedron");
    CHECK(points_match(ico.reference_cpps, state_to_mps(dod.state).points, 1e-9));
    CHECK(points_match(dod.reference_cpps, state_to_mps(ico.state).points, 1e-9));

    const CatalogEntry tet = named_state("tetrahedron");
    CHECK(points_match(tet.reference_cpps, state_to_mps(tet.state).points, 1e-9));
}

TEST_CASE("antiprism family: optimum and the minimal-distance member") {
    // an independent 1-D search over the family parameter must land on the
    // catalog's optimum
    auto neg_e = [](double a) { return -named_state("antiprism_8", {}, {}, a).e_g_reference; };
    const double a_best = golden_section(neg_e, 1.4, 2.3, 1e-10);
    const CatalogEntry opt = named_state("antiprism_8");
    const double a_cat = middle_ratio(opt, 4);
    CHECK(a_best == doctest::Approx(a_cat).epsilon(1e-5));
    // the optimum balances the pole and ring maxima, so the entanglement
    // peaks in a corner there and falls off on both sides
    CHECK(-neg_e(a_best) <= opt.e_g_reference + 1e-9);
    CHECK(-neg_e(a_cat - 1e-4) < opt.e_g_reference - 1e-5);
    CHECK(-neg_e(a_cat + 1e-4) < opt.e_g_reference - 1e-5);

    // the member whose Majorana points maximize the minimal chord has its
    // CPPs at the poles and a closed-form entanglement
    const double t = std::sqrt(1.0 + 2.0 * std::sqrt(2.0)) - 1.0;
    const double tau = 0.125 * t * t * t * t;
    const double a_t = (1.0 - tau * tau) / (std::sqrt(70.0) * tau);
    const CatalogEntry member = named_state("antiprism_8", {}, {}, a_t);
    CHECK(member.e_g_reference ==
          doctest::Approx(std::log2(2.0 + a_t * a_t)).epsilon(1e-12));
    CHECK(std::abs(member.e_g_reference - 1.711525327) < 1e-9);
    const CppReport r = find_cpps(member.state, 1.0);
    REQUIRE(r.cpps.size() == 2);
    CHECK(points_match(r.cpps, {BlochPoint(0.0, 0.0), BlochPoint(M_PI, 0.0)}, 1e-9));

    // and its Majorana points solve the 8-point minimal-distance problem
    const PointSet toth8 = optimize_toth(8, 40, 11);
    CHECK(same_structure(to_pointset(state_to_mps(member.state).points), toth8, 1e-5));
}

TEST_CASE("gyroelongated bipyramid family optimum") {
    const CatalogEntry g = named_state("gyro_bipyramid_10");
    double theta = 0.0;
    REQUIRE(std::sscanf(g.parameters.c_str(), "theta=%lf", &theta) == 1);
    CHECK(std::abs(theta - 1.14246) < 5e-4);

    // Majorana points: poles plus an aligned and a staggered square
    const MPDistribution mp = state_to_mps(g.state);
    std::vector<BlochPoint> expect = {BlochPoint(0.0, 0.0), BlochPoint(M_PI, 0.0)};
    for (int j = 0; j < 4; ++j) {
        expect.push_back(BlochPoint(theta, 0.5 * M_PI * j).canonicalized());
        expect.push_back(BlochPoint(M_PI - theta, 0.25 * M_PI + 0.5 * M_PI * j).canonicalized());
    }
    CHECK(points_match(expect, mp.points, 1e-6));

    // the optimum balances competing maxima, so the entanglement peaks in a
    // corner at theta* and falls off on both sides
    auto e_of = [](double th) {
        return named_state("gyro_bipyramid_10", {}, {}, th).e_g_reference;
    };
    CHECK(std::abs(e_of(theta) - g.e_g_reference) < 1e-8);
    CHECK(e_of(theta - 2e-3) < g.e_g_reference - 1e-4);
    CHECK(e_of(theta + 2e-3) < g.e_g_reference - 1e-4);
}

TEST_CASE("asymmetric pentagonal dipyramid ring latitude") {
    const CatalogEntry e = named_state("asym_pentagonal_dipyramid_8");
    const MPDistribution mp = state_to_mps(e.state);
    double ring = -1.0;
    for (const auto& c : mp.clusters)
        if (c.multiplicity == 1 && c.center.theta > 0.1 && c.center.theta < M_PI - 0.1)
            ring = c.center.theta;
    CHECK(std::abs(ring - 1.715218732) < 1e-6);
}

TEST_CASE("classification flags") {
    CHECK(named_state("octahedron").solves_toth);
    CHECK(named_state("octahedron").solves_thomson);
    CHECK(named_state("octahedron").solves_majorana);
    CHECK(named_state("icosahedron").solves_toth);
    CHECK_FALSE(named_state("cube").solves_toth);
    CHECK_FALSE(named_state("cube").solves_thomson);
    CHECK_FALSE(named_state("cube").solves_majorana);
    CHECK_FALSE(named_state("dodecahedron").solves_toth);
    CHECK(named_state("ghz(3)").solves_toth);
    CHECK_FALSE(named_state("ghz(4)").solves_toth);
    CHECK(named_state("pentagonal_dipyramid_7").solves_thomson);
    CHECK_FALSE(named_state("pentagonal_dipyramid_7").solves_toth);
    CHECK(named_state("nine_max").solves_majorana);
    CHECK_FALSE(named_state("nine_max").solves_thomson);
    CHECK(named_state("toth_11").solves_toth);
    CHECK_FALSE(named_state("toth_11").solves_thomson);

    CHECK(named_state("dicke(6,3)").invariance_group == "O(2)");
    CHECK(named_state("dicke(6,2)").invariance_group == "SO(2)");
    CHECK(named_state("ghz(5)").invariance_group == "D_5");
    CHECK(named_state("tetrahedron").invariance_group == "T");
    CHECK(named_state("icosahedron").invariance_group == "Y");
    CHECK(named_state("gyro_bipyramid_10").invariance_group.empty());

    CHECK(named_state("ten_pos").positive);
    CHECK_FALSE(named_state("antiprism_8").positive);
    CHECK_FALSE(named_state("eleven_max").positive);
    CHECK_FALSE(named_state("toth_11").positive);
    CHECK(named_state("cluster4_equiv_fixture(1)").positive);
    CHECK_FALSE(named_state("cluster4_equiv_fixture(2)").positive);
    CHECK(named_state("cluster4_equiv_fixture(8)").positive);
    CHECK_FALSE(named_state("cluster4_equiv_fixture(11)").positive);
}

TEST_CASE("maximal entanglement candidates leave no spare capacity") {
    for (const char* nm : {"square_pyramid", "pentagonal_dipyramid_7", "nine_max"}) {
        CAPTURE(nm);
        const CatalogEntry e = named_state(nm);
        const CppReport r = find_cpps(e.state, 1.0);
        CHECK(span_check(e.state, r) <= 1e-6);
    }
}
