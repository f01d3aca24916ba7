#pragma once
#include <stdexcept>
#include <string>

namespace symsphere {

// Base class for all library errors.  Input/validation problems map to CLI
// exit code 2, numerical failures (RootFindingFailed) to exit code 3.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroState : Error { using Error::Error; };
struct RootFindingFailed : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };
struct NotPositive : Error { using Error::Error; };
struct EmptyCppSet : Error { using Error::Error; };
struct DegenerateQuadruple : Error { using Error::Error; };
struct DegenerateTriple : Error { using Error::Error; };
struct WrongDiversity : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct CoincidentPoints : Error { using Error::Error; };
struct UnknownName : Error { using Error::Error; };
struct MissingParameter : Error { using Error::Error; };
struct OutOfSupport : Error { using Error::Error; };

} // namespace symsphere
