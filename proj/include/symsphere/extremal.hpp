#pragma once
#include <cstdint>

#include "symsphere/geometric.hpp"
#include "symsphere/symstate.hpp"

namespace symsphere {

enum class AnsatzFamily { General, Positive, Rotational, TwoDicke };

// Search space description for the maximal-entanglement search.  `m` is the
// Z-rotation period for Rotational (support restricted to one residue class
// of coefficient indices mod m); k1 < k2 are the Dicke indices for TwoDicke.
struct SearchAnsatz {
    AnsatzFamily family = AnsatzFamily::Positive;
    int n = 4;
    int m = 2;
    int k1 = 0;
    int k2 = 1;
    int restarts = 20;
    std::uint64_t seed = 0;
};

struct SearchResult {
    SymmetricState best;
    CppReport report;      // computed on the final candidate at 0.5 degree grid
    int restarts_run = 0;
    int best_restart = 0;
    long long evaluations = 0;
    int iterations = 0;    // outer-optimizer iterations of the winning restart
};

// Multistart derivative-free minimization of the injective tensor norm G over
// the ansatz parameter vector; deterministic for a fixed seed.
SearchResult search_max_entangled(const SearchAnsatz& ansatz);

// 1-D optimization of the mixing weight of cos(t) S_{k1} + sin(t) S_{k2},
// 0 <= k1 < k2 <= n, reporting the weight of maximal entanglement.
SearchResult two_dicke_optimum(int n, int k1, int k2);

} // namespace symsphere
