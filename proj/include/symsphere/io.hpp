#pragma once

#include "symsphere/symstate.hpp"

#include <string>

namespace symsphere {

// Formats a double with 17 significant digits, enough for a lossless
// round-trip through text.
std::string json_number(double x);

// Parses the documented state object.  Two layouts are accepted:
//   {"n": 3, "dicke": [[re, im], ...]}        with n+1 coefficient pairs
//   {"mps": [{"theta": t, "phi": p}, ...]}    with n points, radians
// Exactly one of "dicke"/"mps" must be present.  Coefficients are taken as
// given; callers normalize when they need a unit vector.  Throws OutOfRange
// on any schema violation.
SymmetricState state_from_json(const std::string& text);

// Reads a whole file and parses it with state_from_json.  Throws OutOfRange
// when the file cannot be read.
SymmetricState load_state_file(const std::string& path);

// Serializes to the "dicke" layout of the same format.
std::string state_to_json(const SymmetricState& s);

} // namespace symsphere
