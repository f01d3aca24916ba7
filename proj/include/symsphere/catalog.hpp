#pragma once
#include "symsphere/bloch.hpp"
#include "symsphere/symstate.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symsphere {

// Reference state with its tabulated entanglement, closest-product-point
// data and classification flags.  Immutable after construction.
struct CatalogEntry {
    std::string name;        // canonical name, parameters included
    std::string parameters;  // human-readable parameter summary, may be empty
    int n = 0;
    SymmetricState state;    // unit norm
    double e_g_reference = 0.0;
    bool e_g_exact = true;   // algebraic reference vs truncated decimal
    int cpp_count = 0;       // 0 when not tabulated
    bool cpp_ring = false;   // the maximum is a full circle of latitude
    std::string cpp_description;
    bool positive = false;   // coefficients real-nonnegative up to global phase
    std::string invariance_group;  // "" when not totally invariant
    bool solves_toth = false;
    bool solves_thomson = false;
    bool solves_majorana = false;
    std::string note;
    std::vector<BlochPoint> reference_cpps;  // empty when not tabulated
    std::vector<int> reference_dc;           // MP multiplicities, descending
};

struct VerifyItem {
    std::string field;
    bool pass = false;
    double error = 0.0;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_pass() const;
};

// Base names accepted by named_state, in catalog order.
std::vector<std::string> catalog_names();

// Builds a catalog entry.  Parameters may be embedded in the name
// ("dicke(5,2)", "antiprism_8(1.2)") or passed separately; explicit
// arguments win over embedded ones.  x carries the family parameter of
// antiprism_8 (the middle coefficient A) and gyro_bipyramid_10 (the upper
// ring latitude theta); both default to the optimum of the family, solved
// or searched at first use.  Throws UnknownName, MissingParameter or
// OutOfRange.
CatalogEntry named_state(const std::string& name, std::optional<int> n = {},
                         std::optional<int> k = {},
                         std::optional<double> x = {});

// Recomputes normalization, E_g, CPP count or ring flag, coefficient
// positivity, MP degeneracies and the tabulated CPP positions, and compares
// each against the entry's stored references.  Exact references are held to
// 1e-6, truncated decimals to 1e-5.
VerifyReport verify_entry(const CatalogEntry& entry);

} // namespace symsphere
