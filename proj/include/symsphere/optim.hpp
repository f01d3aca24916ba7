#pragma once
#include <functional>
#include <vector>

namespace symsphere {

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
};

// Derivative-free simplex minimization.  Terminates when the simplex
// diameter falls below diameter_tol or after max_iter iterations.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, double step,
                             double diameter_tol, int max_iter);

// Golden-section minimization of a unimodal function on [a, b].
double golden_section(const std::function<double(double)>& f, double a, double b,
                      double tol);

} // namespace symsphere
