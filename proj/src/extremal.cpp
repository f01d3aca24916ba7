#include "symsphere/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <vector>

#include "symsphere/errors.hpp"
#include "symsphere/optim.hpp"
#include "symsphere/parallel.hpp"
#include "symsphere/rng.hpp"

namespace symsphere {

namespace {

void validate(const SearchAnsatz& a) {
    if (a.n < 2) throw Error("search needs n >= 2");
    if (a.restarts < 1) throw Error("search needs restarts >= 1");
    if (a.family == AnsatzFamily::Rotational && (a.m < 2 || a.m > a.n))
        throw OutOfRange("rotational period must lie in [2, n]");
    if (a.family == AnsatzFamily::TwoDicke &&
        (a.k1 < 0 || a.k2 <= a.k1 || a.k2 > a.n))
        throw OutOfRange("two-dicke indices must satisfy 0 <= k1 < k2 <= n");
}

// Indices of the residue class l mod m inside [0, n].
std::vector<int> residue_indices(int n, int m, int l) {
    std::vector<int> idx;
    for (int k = l; k <= n; k += m) idx.push_back(k);
    return idx;
}

int param_count(const SearchAnsatz& a, int offset) {
    switch (a.family) {
        case AnsatzFamily::Positive: return a.n + 1;
        case AnsatzFamily::General: return 2 * a.n - 1;
        case AnsatzFamily::Rotational:
            return 2 * static_cast<int>(residue_indices(a.n, a.m, offset).size()) - 1;
        case AnsatzFamily::TwoDicke: return 1;
    }
    return 0;
}

// Decodes a real parameter vector into a normalized state.  Positive squares
// its parameters; General fixes the gauge a_0 real and a_n = 0 (one MP pinned
// to the north pole); Rotational fixes the first coefficient real.
SymmetricState decode(const SearchAnsatz& a, int offset, const std::vector<double>& v) {
    std::vector<cplx> c(a.n + 1, cplx(0.0, 0.0));
    switch (a.family) {
        case AnsatzFamily::Positive:
            for (int k = 0; k <= a.n; ++k) c[k] = v[k] * v[k];
            break;
        case AnsatzFamily::General:
            c[0] = std::abs(v[0]);
            for (int k = 1; k < a.n; ++k) c[k] = cplx(v[2 * k - 1], v[2 * k]);
            break;
        case AnsatzFamily::Rotational: {
            const std::vector<int> idx = residue_indices(a.n, a.m, offset);
            c[idx[0]] = v[0];
            for (std::size_t i = 1; i < idx.size(); ++i)
                c[idx[i]] = cplx(v[2 * i - 1], v[2 * i]);
            break;
        }
        case AnsatzFamily::TwoDicke:
            c[a.k1] = std::cos(v[0]);
            c[a.k2] = std::sin(v[0]);
            break;
    }
    SymmetricState s;
    s.coeffs = std::move(c);
    return normalize(s);
}

struct RestartOutcome {
    SymmetricState state;
    double g = 2.0;
    long long evaluations = 0;
    int iterations = 0;
    bool valid = false;
};

RestartOutcome run_restart(const SearchAnsatz& a, int restart) {
    Rng rng(a.seed ^ (0x9E3779B97F4A7C15ULL * (restart + 1)));
    const int offset = (a.family == AnsatzFamily::Rotational) ? restart % a.m : 0;
    const int dim = param_count(a, offset);

    std::vector<double> x0(dim);
    if (restart == 0 &&
        (a.family == AnsatzFamily::Positive || a.family == AnsatzFamily::General)) {
        // deterministic warm start near the half-filled Dicke state, whose
        // entanglement lower-bounds the optimum
        const int mid = a.n / 2;
        for (int i = 0; i < dim; ++i) x0[i] = 0.05;
        if (a.family == AnsatzFamily::Positive)
            x0[mid] = 1.0;
        else if (mid == 0)
            x0[0] = 1.0;
        else
            x0[2 * mid - 1] = 1.0;
    } else {
        for (auto& xi : x0) xi = rng.normal();
    }

    long long evals = 0;
    const auto objective = [&](const std::vector<double>& v) {
        ++evals;
        try {
            return find_cpps(decode(a, offset, v), 2.0).g_max;
        } catch (const ZeroState&) {
            return 2.0;
        }
    };

    // simplex restarts with shrinking perturbation scale; the objective is a
    // max of smooth functions, so plain Nelder-Mead collapses early on the
    // kinked landscape and needs repeated re-expansion to converge fully
    NelderMeadResult nm = nelder_mead(objective, x0, 0.3, 1e-10, 300 + 120 * dim);
    int iterations = nm.iterations;
    for (const double step : {0.02, 2e-3, 2e-4, 2e-5, 2e-6}) {
        const NelderMeadResult again =
            nelder_mead(objective, nm.x, step, 1e-13, 300 + 120 * dim);
        iterations += again.iterations;
        if (again.value < nm.value) nm = again;
    }

    RestartOutcome out;
    try {
        out.state = decode(a, offset, nm.x);
        out.valid = true;
    } catch (const ZeroState&) {
        out.valid = false;
    }
    out.g = nm.value;

    // The objective is quadratically insensitive to coefficient dust, so the
    // simplex stalls with ~sqrt(eps) residue in coefficients that are exactly
    // zero at the optimum; zero them out when that does not hurt.
    if (out.valid) {
        double cmax = 0.0;
        for (const auto& ck : out.state.coeffs) cmax = std::max(cmax, std::abs(ck));
        SymmetricState cleaned = out.state;
        bool any = false;
        for (auto& ck : cleaned.coeffs)
            if (ck != cplx(0.0, 0.0) && std::abs(ck) < 1e-5 * cmax) {
                ck = cplx(0.0, 0.0);
                any = true;
            }
        if (any) {
            try {
                cleaned = normalize(cleaned);
                ++evals;
                const double g = find_cpps(cleaned, 2.0).g_max;
                if (g <= out.g + 1e-12) {
                    out.state = cleaned;
                    out.g = std::min(out.g, g);
                }
            } catch (const ZeroState&) {
            }
        }
    }
    out.evaluations = evals;
    out.iterations = iterations;
    return out;
}

} // namespace

SearchResult search_max_entangled(const SearchAnsatz& ansatz) {
    validate(ansatz);
    if (ansatz.family == AnsatzFamily::TwoDicke)
        return two_dicke_optimum(ansatz.n, ansatz.k1, ansatz.k2);

    std::vector<RestartOutcome> outcomes(ansatz.restarts);
    parallel_for(static_cast<std::size_t>(ansatz.restarts),
                 [&](std::size_t r) { outcomes[r] = run_restart(ansatz, static_cast<int>(r)); });

    int best = -1;
    for (int r = 0; r < ansatz.restarts; ++r) {
        if (!outcomes[r].valid) continue;
        if (best < 0 || outcomes[r].g < outcomes[best].g) best = r;
    }
    if (best < 0) throw Error("all search restarts failed");

    SearchResult result;
    result.best = outcomes[best].state;
    result.report = find_cpps(result.best, 0.5);
    result.restarts_run = ansatz.restarts;
    result.best_restart = best;
    result.iterations = outcomes[best].iterations;
    for (const auto& o : outcomes) result.evaluations += o.evaluations;
    return result;
}

SearchResult two_dicke_optimum(int n, int k1, int k2) {
    if (n < 1 || k1 < 0 || k2 <= k1 || k2 > n)
        throw OutOfRange("two-dicke indices must satisfy 0 <= k1 < k2 <= n");

    SearchAnsatz a;
    a.family = AnsatzFamily::TwoDicke;
    a.n = n;
    a.k1 = k1;
    a.k2 = k2;

    long long evals = 0;
    const auto g_of = [&](double t) {
        ++evals;
        return positive_cpp_search(decode(a, 0, {t})).g_max;
    };

    // dense scan of the mixing angle (endpoints included: the optimum can sit
    // at a pure Dicke state), then golden-section refinement around the best
    // sample
    const int samples = 400;
    double best_t = 0.0, best_g = 2.0;
    for (int i = 0; i <= samples; ++i) {
        const double t = 0.5 * M_PI * i / samples;
        const double g = g_of(t);
        if (g < best_g) {
            best_g = g;
            best_t = t;
        }
    }
    const double width = 0.5 * M_PI / samples;
    double t = golden_section(g_of, std::max(0.0, best_t - width),
                              std::min(0.5 * M_PI, best_t + width), 1e-12);
    if (g_of(best_t) < g_of(t)) t = best_t;

    SearchResult result;
    result.best = decode(a, 0, {t});
    result.report = positive_cpp_search(result.best);
    result.restarts_run = 1;
    result.evaluations = evals;
    return result;
}

} // namespace symsphere
