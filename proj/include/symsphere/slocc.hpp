#pragma once
#include "symsphere/bloch.hpp"
#include "symsphere/errors.hpp"
#include "symsphere/mat2.hpp"
#include "symsphere/symstate.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symsphere {

// Degeneracy configuration: Majorana point multiplicities sorted descending.
struct DCClass {
    std::vector<int> partition;

    int diversity() const { return static_cast<int>(partition.size()); }
    bool operator==(const DCClass& o) const { return partition == o.partition; }
    bool operator!=(const DCClass& o) const { return partition != o.partition; }
};

enum class Relation { LuEquivalent, SloccNotLu, Inequivalent };

const char* relation_name(Relation r);

struct EquivalenceVerdict {
    Relation relation = Relation::Inequivalent;
    std::optional<Mat2> witness; // present iff relation is an equivalence
    std::string detail;
};

// z -> A z + B with A > 0; together with rotations these factor any Moebius map.
struct AffinePart {
    double scale = 1.0; // A
    cplx shear{0.0, 0.0}; // B
};

DCClass dc_class(const MPDistribution& mps);

// (v1 - v3)(v2 - v4) / ((v2 - v3)(v1 - v4)), evaluated projectively so that
// points at infinity are handled by limits.
ExtendedComplex cross_ratio(const ExtendedComplex& v1, const ExtendedComplex& v2,
                            const ExtendedComplex& v3, const ExtendedComplex& v4);

// The values the cross-ratio takes over reorderings of its arguments:
// {l, 1/l, 1-l, 1/(1-l), l/(l-1), (l-1)/l}, deduplicated.
std::vector<ExtendedComplex> cross_ratio_orbit(const ExtendedComplex& lambda);

// The unique unit-determinant Moebius map (up to sign) with src[i] -> dst[i].
Mat2 mobius_from_triples(const std::array<ExtendedComplex, 3>& src,
                         const std::array<ExtendedComplex, 3>& dst);

EquivalenceVerdict slocc_equivalence(const SymmetricState& s1, const SymmetricState& s2,
                                     double tol = 1e-6);

// Like slocc_equivalence, but a witness qualifies as LU only if it is
// proportional to a unitary; searches all candidate witnesses for one.
EquivalenceVerdict lu_equivalence(const SymmetricState& s1, const SymmetricState& s2,
                                  double tol = 1e-6);

// Factor M into a rotation followed by an affine stretch: U * [[A,B],[0,1]]
// is proportional to M.
std::pair<Mat2, AffinePart> decompose_slocc(const Mat2& m);

// Canonical SLOCC representative of a 4-qubit state with four distinct
// Majorana points: three points are sent to the equidistant equatorial
// triangle and the image of the fourth, reduced by the triangle's symmetry
// group, parameterizes the class.
std::pair<cplx, SymmetricState> canonical_rep_4q(const SymmetricState& s);

// Member of the canonical family of 5-qubit states with a degenerate
// Majorana point; distinct parameters give SLOCC-inequivalent states.
SymmetricState rep_state_5q(const cplx& t);

// Coefficient-wise complex conjugation; reflects all MPs through the x-z plane.
SymmetricState conjugate_state(const SymmetricState& s);

} // namespace symsphere
