#include "symsphere/optim.hpp"

#include <algorithm>
#include <cmath>

namespace symsphere {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, double step,
                             double diameter_tol, int max_iter) {
    const std::size_t dim = x0.size();
    std::vector<std::vector<double>> pts(dim + 1, x0);
    for (std::size_t i = 0; i < dim; ++i) pts[i + 1][i] += step;
    std::vector<double> vals(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) vals[i] = f(pts[i]);

    NelderMeadResult res;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        std::vector<std::size_t> order(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });

        double diameter = 0.0;
        for (std::size_t i = 1; i <= dim; ++i) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double d = pts[order[i]][k] - pts[order[0]][k];
                d2 += d * d;
            }
            diameter = std::max(diameter, std::sqrt(d2));
        }
        if (diameter < diameter_tol) break;

        const std::size_t worst = order[dim];
        const std::size_t second = order[dim - 1];
        const std::size_t best = order[0];

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k) centroid[k] += pts[order[i]][k] / double(dim);

        auto blend = [&](double t) {
            std::vector<double> x(dim);
            for (std::size_t k = 0; k < dim; ++k)
                x[k] = centroid[k] + t * (pts[worst][k] - centroid[k]);
            return x;
        };

        const std::vector<double> xr = blend(-1.0);
        const double fr = f(xr);
        if (fr < vals[best]) {
            const std::vector<double> xe = blend(-2.0);
            const double fe = f(xe);
            if (fe < fr) {
                pts[worst] = xe;
                vals[worst] = fe;
            } else {
                pts[worst] = xr;
                vals[worst] = fr;
            }
            continue;
        }
        if (fr < vals[second]) {
            pts[worst] = xr;
            vals[worst] = fr;
            continue;
        }
        const std::vector<double> xc = blend(fr < vals[worst] ? -0.5 : 0.5);
        const double fc = f(xc);
        if (fc < std::min(fr, vals[worst])) {
            pts[worst] = xc;
            vals[worst] = fc;
            continue;
        }
        // shrink toward the best vertex
        for (std::size_t i = 0; i <= dim; ++i) {
            if (i == best) continue;
            for (std::size_t k = 0; k < dim; ++k)
                pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
            vals[i] = f(pts[i]);
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= dim; ++i)
        if (vals[i] < vals[best]) best = i;
    res.x = pts[best];
    res.value = vals[best];
    res.iterations = iter;
    return res;
}

double golden_section(const std::function<double(double)>& f, double a, double b,
                      double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace symsphere
