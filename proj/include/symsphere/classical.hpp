#pragma once
#include <array>
#include <cstdint>
#include <vector>

#include "symsphere/symstate.hpp"

namespace symsphere {

// n unit vectors on the sphere, the configuration space of the Thomson and
// Toth point-distribution problems.
struct PointSet {
    std::vector<std::array<double, 3>> points;

    int n() const { return static_cast<int>(points.size()); }
};

// Coulomb energy sum_{i<j} 1/|r_i - r_j|.  Throws CoincidentPoints when a
// pair is closer than 1e-12.
double thomson_energy(const PointSet& ps);

// Smallest pairwise Euclidean chord min_{i<j} |r_i - r_j|.
double toth_objective(const PointSet& ps);

// Multistart projected gradient descent on the Coulomb energy.  Restarts are
// seeded deterministically from `seed`; the best restart wins (ties broken by
// lexicographic point order).  If `history` is given it receives the energy
// trace of the winning restart, one entry per accepted step.
PointSet optimize_thomson(int n, int restarts = 50, std::uint64_t seed = 0,
                          std::vector<double>* history = nullptr);

// Maximin-distance optimizer: Riesz-energy homotopy over exponents
// l in {2,4,8,16,32}, each stage warm-started from the previous minimizer,
// followed by a push-apart maximin polish driven by bisection on the target
// separation.  `history` receives the min-chord trace of accepted polish
// improvements of the winning restart.
PointSet optimize_toth(int n, int restarts = 50, std::uint64_t seed = 0,
                       std::vector<double>* history = nullptr);

// Sorted (ascending) multiset of all pairwise chords.
std::vector<double> pairwise_distances(const PointSet& ps);

// Rotation-free structure match: sorted pairwise-distance multisets agree
// entrywise within tol.
bool same_structure(const PointSet& a, const PointSet& b, double tol = 1e-6);

// Interprets each unit vector as a Majorana point and builds the symmetric
// state with those MPs.
SymmetricState pointset_to_state(const PointSet& ps);

} // namespace symsphere
