#include "symsphere/catalog.hpp"

#include "symsphere/errors.hpp"
#include "symsphere/geometric.hpp"
#include "symsphere/optim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace symsphere {
namespace {

template <typename F>
double bisect_root(double lo, double hi, F f) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Exact algebraic constants are solved at load time instead of storing
// truncated decimals.

// Root in (0, 1) of 4x^4 + 4x^3 + 4x^2 - x - 1; the square pyramid's ring
// CPPs have spinor component cos(theta/2) = x.
double pyramid5_x() {
    static const double x = bisect_root(0.0, 1.0, [](double t) {
        return ((4.0 * t + 4.0) * t + 4.0) * t * t - t - 1.0;
    });
    return x;
}

double pyramid5_coeff() {
    const double x = pyramid5_x();
    return std::sqrt(5.0) / (4.0 * x * (1.0 - x * x));
}

// Root in (0.4, 0.5) of 49x^3 + 165x^2 - 205x + 55; the CPP rings of
// (S_1 + S_6)/sqrt(2) sit at cos^2(theta) = x.
double dipyramid7_x() {
    static const double x = bisect_root(0.4, 0.5, [](double t) {
        return ((49.0 * t + 165.0) * t - 205.0) * t + 55.0;
    });
    return x;
}

// Root in (0.2, 0.25) of 81x^3 + 385x^2 - 245x + 35; the CPP rings of
// (S_2 + S_7)/sqrt(2) sit at cos^2(theta) = x.
double dipyramid9_x() {
    static const double x = bisect_root(0.2, 0.25, [](double t) {
        return ((81.0 * t + 385.0) * t - 245.0) * t + 35.0;
    });
    return x;
}

// Root in (0.7, 0.8) of x^6 - x^4 + 2x^2 - 1; the optimal antiprism's ring
// CPPs have spinor component cos(theta/2) = x.
double antiprism8_x() {
    static const double x = bisect_root(0.7, 0.8, [](double t) {
        const double t2 = t * t;
        return ((t2 - 1.0) * t2 + 2.0) * t2 - 1.0;
    });
    return x;
}

double antiprism8_coeff() {
    const double x2 = antiprism8_x() * antiprism8_x();
    const double y2 = 1.0 - x2;
    const double x4 = x2 * x2, y4 = y2 * y2;
    return (1.0 - x4 * x4 + y4 * y4) / (std::sqrt(70.0) * x4 * y4);
}

SymmetricState sparse_state(int n, std::initializer_list<std::pair<int, cplx>> terms) {
    std::vector<cplx> a(static_cast<size_t>(n) + 1, cplx(0.0, 0.0));
    for (const auto& t : terms) a[static_cast<size_t>(t.first)] = t.second;
    return normalize(SymmetricState(std::move(a)));
}

void add_ring(std::vector<BlochPoint>& out, double theta, int count, double phi0) {
    for (int j = 0; j < count; ++j)
        out.push_back(BlochPoint(theta, phi0 + 2.0 * M_PI * j / count).canonicalized());
}

std::vector<int> all_simple(int n) { return std::vector<int>(static_cast<size_t>(n), 1); }

std::string fmt(const char* f, ...) {
    char buf[128];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

// Entanglement of (S_k + S_{n-k})/sqrt(2) when the maximum sits at
// latitude theta on the phi = 0 meridian.
double ring_pair_e(int n, int k, double theta) {
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    const double g = (sqrt_binomial(n, k) / std::sqrt(2.0)) *
                     (std::pow(c, n - k) * std::pow(s, k) +
                      std::pow(c, k) * std::pow(s, n - k));
    return -2.0 * std::log2(g);
}

// Entanglement of (S_0 + A S_4 - S_8)/sqrt(2 + A^2).  The azimuth
// maximization is exact (phases align on the MP meridians), leaving a 1-D
// latitude scan; the poles compete with the ring maximum.
double antiprism8_e(double a) {
    const double w = std::sqrt(70.0) * a;
    auto f = [&](double th) {
        const double c2 = std::pow(std::cos(0.5 * th), 2);
        const double s2 = 1.0 - c2;
        const double c4 = c2 * c2, s4 = s2 * s2;
        return std::abs(c4 * c4 - s4 * s4) + w * c4 * s4;
    };
    // Every interior mesh-local maximum is refined: near the pole/ring tie
    // the ring peak sits within mesh error of the pole value and must not
    // be lost to it.
    const int m = 512;
    const double step = 0.5 * M_PI / m;
    std::vector<double> v(m + 1);
    for (int i = 0; i <= m; ++i) v[i] = f(step * i);
    double peak = std::max(v[0], v[m]);
    for (int i = 1; i < m; ++i) {
        if (v[i] >= v[i - 1] && v[i] >= v[i + 1]) {
            const double th = golden_section([&](double t) { return -f(t); },
                                             step * (i - 1), step * (i + 1), 1e-13);
            peak = std::max(peak, f(th));
        }
    }
    return std::log2((2.0 + a * a) / (peak * peak));
}

SymmetricState gyro_state(double theta) {
    const double t = std::tan(0.5 * theta);
    const double tau = t * t * t * t;
    const double a = std::sqrt(10.0) * (1.0 - tau * tau) / (std::sqrt(252.0) * tau);
    return sparse_state(10, {{1, 1.0}, {5, a}, {9, -1.0}});
}

// Ring latitude maximizing the entanglement of the gyroelongated square
// bipyramid family; searched once and cached.
double gyro_optimal_theta() {
    static const double th = golden_section(
        [](double t) { return find_cpps(gyro_state(t), 2.0).g_max; }, 1.0, 1.3, 1e-9);
    return th;
}

CatalogEntry ghz_entry(int n) {
    if (n < 2) throw OutOfRange("ghz requires n >= 2");
    CatalogEntry e;
    e.name = fmt("ghz(%d)", n);
    e.parameters = fmt("n=%d", n);
    e.n = n;
    e.state = sparse_state(n, {{0, 1.0}, {n, 1.0}});
    e.e_g_reference = 1.0;
    if (n == 2) {
        // The product maxima of the Bell state form a full great circle
        // through the poles, which the latitude-ring detector does not
        // collapse, so the count is left untabulated.
        e.cpp_description = "great circle through both poles";
    } else {
        e.cpp_count = 2;
        e.cpp_description = "the two poles";
        e.reference_cpps = {BlochPoint(0.0, 0.0), BlochPoint(M_PI, 0.0)};
    }
    e.positive = true;
    e.invariance_group = fmt("D_%d", n);
    e.solves_toth = e.solves_thomson = (n == 3);
    e.note = "Majorana points form the equatorial regular n-gon";
    e.reference_dc = all_simple(n);
    return e;
}

CatalogEntry dicke_entry(int n, int k, bool as_w) {
    if (n < 2) throw OutOfRange("dicke requires n >= 2");
    if (k < 0 || k > n) throw OutOfRange("dicke requires 0 <= k <= n");
    CatalogEntry e;
    e.name = as_w ? fmt("w(%d)", n) : fmt("dicke(%d,%d)", n, k);
    e.parameters = as_w ? fmt("n=%d", n) : fmt("n=%d, k=%d", n, k);
    e.n = n;
    e.state = sparse_state(n, {{k, 1.0}});
    e.e_g_reference = dicke_entanglement(n, k);
    if (k == 0 || k == n) {
        e.cpp_count = 1;
        e.cpp_description = "a single pole";
        e.reference_cpps = {k == 0 ? BlochPoint(0.0, 0.0) : BlochPoint(M_PI, 0.0)};
        e.reference_dc = {n};
    } else {
        e.cpp_ring = true;
        e.cpp_description = fmt("full circle at cos(theta) = %d/%d", n - 2 * k, n);
        e.reference_dc = {std::max(k, n - k), std::min(k, n - k)};
    }
    e.positive = true;
    e.invariance_group = (2 * k == n) ? "O(2)" : "SO(2)";
    e.solves_toth = e.solves_thomson = (n == 2 && k == 1);
    e.solves_majorana = (n == 3 && (k == 1 || k == 2));
    if (as_w) e.note = "alias of dicke(n,1)";
    return e;
}

CatalogEntry tetrahedron_entry() {
    CatalogEntry e;
    e.name = "tetrahedron";
    e.n = 4;
    e.state = sparse_state(4, {{0, 1.0}, {3, std::sqrt(2.0)}});
    e.e_g_reference = std::log2(3.0);
    e.cpp_count = 4;
    e.cpp_description = "coincide with the Majorana points";
    e.reference_cpps.push_back(BlochPoint(0.0, 0.0));
    add_ring(e.reference_cpps, 2.0 * std::atan(std::sqrt(2.0)), 3, 0.0);
    e.positive = true;
    e.invariance_group = "T";
    e.solves_toth = e.solves_thomson = e.solves_majorana = true;
    e.reference_dc = all_simple(4);
    return e;
}

CatalogEntry trigonal_bipyramid_entry() {
    CatalogEntry e;
    e.name = "trigonal_bipyramid";
    e.n = 5;
    e.state = sparse_state(5, {{1, 1.0}, {4, 1.0}});
    e.e_g_reference = std::log2(16.0 / 5.0);
    e.cpp_count = 3;
    e.cpp_description = "equatorial triangle below the Majorana triangle";
    add_ring(e.reference_cpps, 0.5 * M_PI, 3, 0.0);
    e.positive = true;
    e.invariance_group = "D_3";
    e.solves_toth = e.solves_thomson = true;
    e.reference_dc = all_simple(5);
    return e;
}

CatalogEntry square_pyramid_entry() {
    const double x = pyramid5_x();
    const double a = pyramid5_coeff();
    CatalogEntry e;
    e.name = "square_pyramid";
    e.n = 5;
    e.state = sparse_state(5, {{0, 1.0}, {4, a}});
    e.e_g_reference = std::log2(1.0 + a * a);
    e.cpp_count = 5;
    e.cpp_description = "north pole and a square below the Majorana square";
    e.reference_cpps.push_back(BlochPoint(0.0, 0.0));
    add_ring(e.reference_cpps, 2.0 * std::acos(x), 4, 0.0);
    e.positive = true;
    e.solves_majorana = true;
    e.note = "A maximizes the entanglement of the (S_0 + A*S_4) family";
    e.reference_dc = all_simple(5);
    return e;
}

CatalogEntry octahedron_entry() {
    CatalogEntry e;
    e.name = "octahedron";
    e.n = 6;
    e.state = sparse_state(6, {{1, 1.0}, {5, 1.0}});
    e.e_g_reference = std::log2(9.0 / 2.0);
    e.cpp_count = 8;
    e.cpp_description = "vertices of the dual cube";
    const double th = std::acos(1.0 / std::sqrt(3.0));
    add_ring(e.reference_cpps, th, 4, 0.0);
    add_ring(e.reference_cpps, M_PI - th, 4, 0.0);
    e.positive = true;
    e.invariance_group = "O";
    e.solves_toth = e.solves_thomson = e.solves_majorana = true;
    e.reference_dc = all_simple(6);
    return e;
}

CatalogEntry pentagonal_dipyramid_7_entry() {
    const double th = std::acos(std::sqrt(dipyramid7_x()));
    CatalogEntry e;
    e.name = "pentagonal_dipyramid_7";
    e.n = 7;
    e.state = sparse_state(7, {{1, 1.0}, {6, 1.0}});
    e.e_g_reference = ring_pair_e(7, 1, th);
    e.cpp_count = 10;
    e.cpp_description = "two pentagons aligned with the Majorana pentagon";
    add_ring(e.reference_cpps, th, 5, 0.0);
    add_ring(e.reference_cpps, M_PI - th, 5, 0.0);
    e.positive = true;
    e.invariance_group = "D_5";
    e.solves_thomson = e.solves_majorana = true;
    e.reference_dc = all_simple(7);
    return e;
}

CatalogEntry cube_entry() {
    CatalogEntry e;
    e.name = "cube";
    e.n = 8;
    e.state = sparse_state(8, {{0, std::sqrt(5.0)}, {4, std::sqrt(14.0)}, {8, std::sqrt(5.0)}});
    e.e_g_reference = std::log2(24.0 / 5.0);
    e.cpp_count = 6;
    e.cpp_description = "vertices of the dual octahedron";
    e.reference_cpps = {BlochPoint(0.0, 0.0), BlochPoint(M_PI, 0.0)};
    add_ring(e.reference_cpps, 0.5 * M_PI, 4, 0.0);
    e.positive = true;
    e.invariance_group = "O";
    e.reference_dc = all_simple(8);
    return e;
}

CatalogEntry asym_pentagonal_dipyramid_8_entry() {
    CatalogEntry e;
    e.name = "asym_pentagonal_dipyramid_8";
    e.n = 8;
    e.state = sparse_state(8, {{1, 0.671588032}, {6, 0.740924770}});
    e.e_g_reference = 2.445210159;
    e.e_g_exact = false;
    e.cpp_count = 10;
    e.cpp_description = "two pentagons";
    e.positive = true;
    e.solves_majorana = true;
    e.note = "doubled north pole, single south pole and a pentagon";
    e.reference_dc = {2, 1, 1, 1, 1, 1, 1};
    return e;
}

CatalogEntry antiprism_8_entry(std::optional<double> x) {
    const bool optimal = !x.has_value();
    const double a = optimal ? antiprism8_coeff() : *x;
    if (!(a > 0.0) || !std::isfinite(a))
        throw OutOfRange("antiprism_8 requires A > 0");
    CatalogEntry e;
    e.name = optimal ? "antiprism_8" : fmt("antiprism_8(%.12g)", a);
    e.parameters = fmt(optimal ? "A=%.12g (family optimum)" : "A=%.12g", a);
    e.n = 8;
    e.state = sparse_state(8, {{0, 1.0}, {4, a}, {8, -1.0}});
    e.e_g_reference = antiprism8_e(a);
    if (optimal) {
        e.cpp_count = 10;
        e.cpp_description = "both poles and two squares between the Majorana squares";
        const double th = 2.0 * std::acos(antiprism8_x());
        e.reference_cpps = {BlochPoint(0.0, 0.0), BlochPoint(M_PI, 0.0)};
        add_ring(e.reference_cpps, th, 4, 0.0);
        add_ring(e.reference_cpps, M_PI - th, 4, 0.25 * M_PI);
    }
    e.invariance_group = "";
    e.solves_toth = e.solves_thomson = true;
    e.note = "square antiprism of Majorana points; the minimal-distance and "
             "electrostatic optima occur at other values of A";
    e.reference_dc = all_simple(8);
    return e;
}

CatalogEntry nine_max_entry() {
    const double th = std::acos(std::sqrt(dipyramid9_x()));
    CatalogEntry e;
    e.name = "nine_max";
    e.n = 9;
    e.state = sparse_state(9, {{2, 1.0}, {7, 1.0}});
    e.e_g_reference = ring_pair_e(9, 2, th);
    e.cpp_count = 10;
    e.cpp_description = "two pentagons aligned with the Majorana pentagon";
    add_ring(e.reference_cpps, th, 5, 0.0);
    add_ring(e.reference_cpps, M_PI - th, 5, 0.0);
    e.positive = true;
    e.invariance_group = "D_5";
    e.solves_majorana = true;
    e.note = "pentagonal dipyramid with doubled poles";
    e.reference_dc = {2, 2, 1, 1, 1, 1, 1};
    return e;
}

CatalogEntry triaugmented_prism_9_entry() {
    const double a = (1.0 + 8.0 * std::sqrt(2.0)) / (2.0 * std::sqrt(21.0));
    CatalogEntry e;
    e.name = "triaugmented_prism_9";
    e.n = 9;
    e.state = sparse_state(9, {{0, 1.0}, {3, -a}, {6, -a}, {9, 1.0}});
    e.e_g_reference = std::log2((213.0 + 16.0 * std::sqrt(2.0)) / 42.0);
    e.cpp_count = 5;
    e.cpp_description = "both poles and the three equatorial Majorana points";
    e.reference_cpps = {BlochPoint(0.0, 0.0), BlochPoint(M_PI, 0.0)};
    add_ring(e.reference_cpps, 0.5 * M_PI, 3, 0.0);
    e.solves_toth = e.solves_thomson = true;
    e.note = "three stacked triangles; the minimal-distance and electrostatic "
             "optima occur at other ring latitudes";
    e.reference_dc = all_simple(9);
    return e;
}

CatalogEntry gyro_bipyramid_10_entry(std::optional<double> x) {
    const bool optimal = !x.has_value();
    const double th = optimal ? gyro_optimal_theta() : *x;
    if (!(th > 0.0) || !(th < 0.5 * M_PI))
        throw OutOfRange("gyro_bipyramid_10 requires theta in (0, pi/2)");
    CatalogEntry e;
    e.name = optimal ? "gyro_bipyramid_10" : fmt("gyro_bipyramid_10(%.12g)", th);
    e.parameters = fmt(optimal ? "theta=%.9f (family optimum)" : "theta=%.12g", th);
    e.n = 10;
    e.state = gyro_state(th);
    if (optimal) {
        e.e_g_reference = 2.737432003;
        e.e_g_exact = false;
        e.cpp_count = 8;
        e.cpp_description = "two squares";
    } else {
        e.e_g_reference = find_cpps(e.state, 1.0).e_g;
    }
    e.solves_thomson = e.solves_majorana = true;
    e.note = "poles and two staggered squares; the electrostatic and "
             "product-distance optima occur at other latitudes";
    e.reference_dc = all_simple(10);
    return e;
}

CatalogEntry ten_pos_entry() {
    CatalogEntry e;
    e.name = "ten_pos";
    e.n = 10;
    e.state = sparse_state(10, {{0, 0.395053091}, {4, 0.678420822}, {9, 0.619417665}});
    e.e_g_reference = 2.679763092;
    e.e_g_exact = false;
    e.cpp_description = "three nearly degenerate maxima; the truncated "
                        "coefficients break the tie";
    e.positive = true;
    e.note = "best known positive candidate for 10 qubits";
    e.reference_dc = all_simple(10);
    return e;
}

CatalogEntry rot_pos_10_entry() {
    CatalogEntry e;
    e.name = "rot_pos_10";
    e.n = 10;
    e.state = sparse_state(10, {{2, 1.0}, {8, 1.0}});
    e.e_g_reference = std::log2(32.0 / 5.0);
    e.cpp_count = 12;
    e.cpp_description = "two hexagons";
    const double th = 2.0 * std::acos(std::sqrt((3.0 + std::sqrt(3.0)) / 6.0));
    add_ring(e.reference_cpps, th, 6, 0.0);
    add_ring(e.reference_cpps, M_PI - th, 6, 0.0);
    e.positive = true;
    e.invariance_group = "D_6";
    e.note = "doubled poles and a staggered equatorial hexagon";
    e.reference_dc = {2, 2, 1, 1, 1, 1, 1, 1};
    return e;
}

CatalogEntry eleven_max_entry() {
    CatalogEntry e;
    e.name = "eleven_max";
    e.n = 11;
    e.state = sparse_state(11, {{0, 0.376611967}, {5, 0.715661256}, {10, -0.588211181}});
    e.e_g_reference = 2.817698505;
    e.e_g_exact = false;
    e.cpp_count = 11;
    e.solves_toth = e.solves_majorana = true;
    e.note = "north pole and two pentagons; the minimal-distance and "
             "product-distance optima occur at other coefficients";
    e.reference_dc = all_simple(11);
    return e;
}

CatalogEntry eleven_pos_entry() {
    CatalogEntry e;
    e.name = "eleven_pos";
    e.n = 11;
    e.state = sparse_state(11, {{1, 0.550982113}, {5, 0.578058577}, {10, 0.601886195}});
    e.e_g_reference = 2.773622669;
    e.e_g_exact = false;
    e.cpp_count = 2;
    e.positive = true;
    e.note = "best known positive candidate for 11 qubits";
    e.reference_dc = all_simple(11);
    return e;
}

CatalogEntry icosahedron_entry() {
    CatalogEntry e;
    e.name = "icosahedron";
    e.n = 12;
    e.state = sparse_state(12, {{1, std::sqrt(7.0)}, {6, -std::sqrt(11.0)}, {11, -std::sqrt(7.0)}});
    e.e_g_reference = std::log2(243.0 / 28.0);
    e.cpp_count = 20;
    e.cpp_description = "face centers, the vertices of the dual dodecahedron";
    const double q = std::sqrt(5.0);
    const double ap = std::sqrt(0.5 + 0.5 * std::sqrt((5.0 + 2.0 * q) / 15.0));
    const double am = std::sqrt(0.5 - 0.5 * std::sqrt((5.0 + 2.0 * q) / 15.0));
    const double bp = std::sqrt(0.5 + 0.5 * std::sqrt((5.0 - 2.0 * q) / 15.0));
    const double bm = std::sqrt(0.5 - 0.5 * std::sqrt((5.0 - 2.0 * q) / 15.0));
    add_ring(e.reference_cpps, 2.0 * std::acos(ap), 5, M_PI);
    add_ring(e.reference_cpps, 2.0 * std::acos(bp), 5, M_PI);
    add_ring(e.reference_cpps, 2.0 * std::acos(bm), 5, 0.0);
    add_ring(e.reference_cpps, 2.0 * std::acos(am), 5, 0.0);
    e.invariance_group = "Y";
    e.solves_toth = e.solves_thomson = e.solves_majorana = true;
    e.reference_dc = all_simple(12);
    return e;
}

CatalogEntry twelve_pos_entry() {
    CatalogEntry e;
    e.name = "twelve_pos";
    e.n = 12;
    e.state = sparse_state(12, {{1, 0.555046977}, {6, 0.619552827}, {11, 0.555046977}});
    e.e_g_reference = 2.993524700;
    e.e_g_exact = false;
    e.cpp_count = 15;
    e.cpp_description = "three circles, one on the equator";
    e.positive = true;
    e.note = "icosahedron with one Majorana circle rotated into alignment";
    e.reference_dc = all_simple(12);
    return e;
}

CatalogEntry dodecahedron_entry() {
    CatalogEntry e;
    e.name = "dodecahedron";
    e.n = 20;
    e.state = sparse_state(20, {{0, std::sqrt(187.0)},
                                {5, std::sqrt(627.0)},
                                {10, std::sqrt(247.0)},
                                {15, -std::sqrt(627.0)},
                                {20, std::sqrt(187.0)}});
    e.e_g_reference = std::log2(1875.0 / 187.0);
    e.cpp_count = 12;
    e.cpp_description = "face centers, the vertices of the dual icosahedron";
    const double th = 2.0 * std::acos(std::sqrt((5.0 + std::sqrt(5.0)) / 10.0));
    e.reference_cpps = {BlochPoint(0.0, 0.0), BlochPoint(M_PI, 0.0)};
    add_ring(e.reference_cpps, th, 5, 0.0);
    add_ring(e.reference_cpps, M_PI - th, 5, M_PI);
    e.invariance_group = "Y";
    e.reference_dc = all_simple(20);
    return e;
}

CatalogEntry x_state_entry(int n) {
    if (n < 3) throw OutOfRange("x_state requires n >= 3");
    CatalogEntry e;
    e.name = fmt("x_state(%d)", n);
    e.parameters = fmt("n=%d", n);
    e.n = n;
    e.state = sparse_state(n, {{1, std::sqrt(double(n))}, {n, std::sqrt(double(n - 2))}});
    e.e_g_reference = positive_cpp_search(e.state).e_g;
    e.positive = true;
    e.note = "south pole and a ring of n-1 Majorana points; reference "
             "entanglement computed at construction";
    e.reference_dc = all_simple(n);
    return e;
}

CatalogEntry toth_11_entry() {
    CatalogEntry e;
    e.name = "toth_11";
    e.n = 11;
    e.state = sparse_state(11, {{0, std::sqrt(462.0)}, {5, 11.0}, {10, -std::sqrt(42.0)}});
    e.e_g_reference = std::log2(625.0 / 462.0);
    e.cpp_count = 1;
    e.cpp_description = "north pole";
    e.reference_cpps = {BlochPoint(0.0, 0.0)};
    e.solves_toth = true;
    e.note = "minimal-distance optimum for 11 points; same family as eleven_max";
    e.reference_dc = all_simple(11);
    return e;
}

CatalogEntry cluster4_entry(int idx) {
    if (idx < 1 || idx > 12)
        throw OutOfRange("cluster4_equiv_fixture requires an index in 1..12");
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r5 = std::sqrt(5.0);
    const cplx i2(0.0, r2), i5(0.0, r5);
    struct Row {
        int n;
        std::vector<cplx> a;
        int anchor; // 0: ghz(3), 1: tetrahedron, 2: octahedron
    };
    const Row rows[12] = {
        {3, {1, 0, 0, 1}, 0},
        {3, {1, 0, 0, -1}, 0},
        {3, {1, r3, -r3, -1}, 0},
        {3, {1, -r3, -r3, 1}, 0},
        {4, {-r3, 2, r2, 2, -r3}, 1},
        {4, {-r3, -2, r2, -2, -r3}, 1},
        {4, {1, 0, i2, 0, 1}, 1},
        {6, {0, 1, 0, 0, 0, 1, 0}, 2},
        {6, {0, 1, 0, 0, 0, -1, 0}, 2},
        {6, {-r3, 0, r5, 0, r5, 0, -r3}, 2},
        {6, {r2, 0, 0, i5, 0, 0, r2}, 2},
        {6, {r2, 0, 0, -i5, 0, 0, r2}, 2},
    };
    const Row& row = rows[idx - 1];
    CatalogEntry e;
    e.name = fmt("cluster4_equiv_fixture(%d)", idx);
    e.parameters = fmt("index=%d", idx);
    e.n = row.n;
    e.state = normalize(SymmetricState(row.a));
    static const char* anchor_name[3] = {"ghz(3)", "tetrahedron", "octahedron"};
    static const int anchor_cpps[3] = {2, 4, 8};
    e.e_g_reference = row.anchor == 0   ? 1.0
                      : row.anchor == 1 ? std::log2(3.0)
                                        : std::log2(9.0 / 2.0);
    e.cpp_count = anchor_cpps[row.anchor];
    e.positive = (idx == 1 || idx == 8);
    e.note = std::string("locally unitary to ") + anchor_name[row.anchor];
    e.reference_dc = all_simple(row.n);
    return e;
}

std::string trimmed(const std::string& s) {
    const size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

struct ParsedName {
    std::string base;
    std::vector<double> args;
};

ParsedName parse_name(const std::string& raw) {
    const std::string s = trimmed(raw);
    const size_t open = s.find('(');
    if (open == std::string::npos) return {s, {}};
    if (open == 0 || s.back() != ')')
        throw UnknownName("malformed catalog name: " + raw);
    ParsedName p;
    p.base = trimmed(s.substr(0, open));
    const std::string inner = s.substr(open + 1, s.size() - open - 2);
    size_t pos = 0;
    while (pos < inner.size()) {
        const size_t comma = inner.find(',', pos);
        const size_t end = comma == std::string::npos ? inner.size() : comma;
        const std::string tok = trimmed(inner.substr(pos, end - pos));
        char* stop = nullptr;
        const double v = std::strtod(tok.c_str(), &stop);
        if (tok.empty() || stop != tok.c_str() + tok.size())
            throw UnknownName("malformed parameter in catalog name: " + raw);
        p.args.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return p;
}

int as_int(double v) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9) throw OutOfRange("parameter must be an integer");
    return static_cast<int>(r);
}

} // namespace

std::vector<std::string> catalog_names() {
    return {
        "ghz",
        "w",
        "dicke",
        "tetrahedron",
        "trigonal_bipyramid",
        "square_pyramid",
        "octahedron",
        "pentagonal_dipyramid_7",
        "cube",
        "asym_pentagonal_dipyramid_8",
        "antiprism_8",
        "nine_max",
        "triaugmented_prism_9",
        "gyro_bipyramid_10",
        "ten_pos",
        "rot_pos_10",
        "eleven_max",
        "eleven_pos",
        "icosahedron",
        "twelve_pos",
        "dodecahedron",
        "x_state",
        "toth_11",
        "cluster4_equiv_fixture",
    };
}

CatalogEntry named_state(const std::string& name, std::optional<int> n,
                         std::optional<int> k, std::optional<double> x) {
    const ParsedName p = parse_name(name);
    const std::string& b = p.base;
    const auto known = catalog_names();
    if (std::find(known.begin(), known.end(), b) == known.end())
        throw UnknownName("unknown catalog name: " + b);

    const bool int_family =
        b == "ghz" || b == "w" || b == "dicke" || b == "x_state" || b == "cluster4_equiv_fixture";
    const bool real_family = b == "antiprism_8" || b == "gyro_bipyramid_10";
    const size_t max_args = b == "dicke" ? 2 : (int_family || real_family) ? 1 : 0;
    if (p.args.size() > max_args)
        throw OutOfRange("too many parameters for " + b);
    if (int_family) {
        if (!n && !p.args.empty()) n = as_int(p.args[0]);
        if (b == "dicke" && !k && p.args.size() >= 2) k = as_int(p.args[1]);
    } else if (real_family && !x && !p.args.empty()) {
        x = p.args[0];
    }

    if (b == "ghz") {
        if (!n) throw MissingParameter("ghz requires n");
        return ghz_entry(*n);
    }
    if (b == "w") {
        if (!n) throw MissingParameter("w requires n");
        return dicke_entry(*n, 1, true);
    }
    if (b == "dicke") {
        if (!n) throw MissingParameter("dicke requires n");
        if (!k) throw MissingParameter("dicke requires k");
        return dicke_entry(*n, *k, false);
    }
    if (b == "x_state") {
        if (!n) throw MissingParameter("x_state requires n");
        return x_state_entry(*n);
    }
    if (b == "cluster4_equiv_fixture") {
        if (!n) throw MissingParameter("cluster4_equiv_fixture requires an index");
        return cluster4_entry(*n);
    }
    if (b == "antiprism_8") return antiprism_8_entry(x);
    if (b == "gyro_bipyramid_10") return gyro_bipyramid_10_entry(x);
    if (b == "tetrahedron") return tetrahedron_entry();
    if (b == "trigonal_bipyramid") return trigonal_bipyramid_entry();
    if (b == "square_pyramid") return square_pyramid_entry();
    if (b == "octahedron") return octahedron_entry();
    if (b == "pentagonal_dipyramid_7") return pentagonal_dipyramid_7_entry();
    if (b == "cube") return cube_entry();
    if (b == "asym_pentagonal_dipyramid_8") return asym_pentagonal_dipyramid_8_entry();
    if (b == "nine_max") return nine_max_entry();
    if (b == "triaugmented_prism_9") return triaugmented_prism_9_entry();
    if (b == "ten_pos") return ten_pos_entry();
    if (b == "rot_pos_10") return rot_pos_10_entry();
    if (b == "eleven_max") return eleven_max_entry();
    if (b == "eleven_pos") return eleven_pos_entry();
    if (b == "icosahedron") return icosahedron_entry();
    if (b == "twelve_pos") return twelve_pos_entry();
    if (b == "dodecahedron") return dodecahedron_entry();
    return toth_11_entry();
}

bool VerifyReport::all_pass() const {
    for (const auto& i : items)
        if (!i.pass) return false;
    return true;
}

VerifyReport verify_entry(const CatalogEntry& e) {
    VerifyReport rep;
    auto add = [&rep](const char* field, bool pass, double err, std::string detail) {
        rep.items.push_back(VerifyItem{field, pass, err, std::move(detail)});
    };

    double nrm = 0.0;
    for (const auto& c : e.state.coeffs) nrm += std::norm(c);
    add("unit_norm", std::abs(nrm - 1.0) <= 1e-12, std::abs(nrm - 1.0),
        "squared norm of the stored coefficients");

    const double bound = std::log2(e.n + 1.0);
    add("entanglement_bound", e.e_g_reference <= bound + 1e-12,
        std::max(0.0, e.e_g_reference - bound), "reference E_g against log2(n+1)");

    const CppReport r = find_cpps(e.state, 1.0);
    const double tol = e.e_g_exact ? 1e-6 : 1e-5;
    add("e_g", std::abs(r.e_g - e.e_g_reference) <= tol, std::abs(r.e_g - e.e_g_reference),
        fmt("recomputed %.12f vs reference %.12f", r.e_g, e.e_g_reference));

    if (e.cpp_ring) {
        add("cpp_ring", r.continuous_ring, r.continuous_ring ? 0.0 : 1.0,
            "expected a full circle of product maxima");
    } else if (e.cpp_count > 0) {
        const bool ok = !r.continuous_ring && static_cast<int>(r.cpps.size()) == e.cpp_count;
        add("cpp_count", ok, std::abs(double(r.cpps.size()) - e.cpp_count),
            fmt("found %zu CPPs, expected %d", r.cpps.size(), e.cpp_count));
    }

    if (e.positive) {
        size_t m = 0;
        for (size_t i = 1; i < e.state.coeffs.size(); ++i)
            if (std::abs(e.state.coeffs[i]) > std::abs(e.state.coeffs[m])) m = i;
        const cplx ph = e.state.coeffs[m] / std::abs(e.state.coeffs[m]);
        double worst = 0.0;
        for (const auto& c : e.state.coeffs) {
            const cplx b = c * std::conj(ph);
            worst = std::max({worst, std::abs(b.imag()), -b.real()});
        }
        add("positive", worst <= 1e-9, worst, "coefficients after global phase fixing");
    }

    if (!e.reference_dc.empty()) {
        std::vector<int> dc;
        for (const auto& c : state_to_mps(e.state).clusters) dc.push_back(c.multiplicity);
        std::sort(dc.begin(), dc.end(), std::greater<int>());
        std::string got = "{";
        for (size_t i = 0; i < dc.size(); ++i) got += fmt(i ? ",%d" : "%d", dc[i]);
        got += "}";
        const bool ok = dc == e.reference_dc;
        add("dc_class", ok, ok ? 0.0 : 1.0, "recomputed degeneracies " + got);
    }

    if (!e.reference_cpps.empty()) {
        bool ok = !r.continuous_ring && r.cpps.size() == e.reference_cpps.size();
        double worst = 0.0;
        std::vector<char> used(r.cpps.size(), 0);
        for (size_t i = 0; ok && i < e.reference_cpps.size(); ++i) {
            int best = -1;
            double bd = 4.0;
            for (size_t j = 0; j < r.cpps.size(); ++j) {
                if (used[j]) continue;
                const double d = chord(e.reference_cpps[i], r.cpps[j]);
                if (d < bd) {
                    bd = d;
                    best = j;
                }
            }
            worst = std::max(worst, bd);
            if (best < 0 || bd > 1e-6) ok = false;
            else used[best] = 1;
        }
        add("reference_cpps", ok, worst,
            "chordal match of recomputed against stored product points");
    }
    return rep;
}

} // namespace symsphere
