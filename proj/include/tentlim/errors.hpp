#pragma once
// Error taxonomy. Every certification failure is a thrown exception, never a
// silently-wrong value; PrecisionExhausted in particular means an interval
// comparison could not be certified at the working precision.
#include <stdexcept>
#include <string>

namespace tentlim {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedNumber : Error { using Error::Error; };
struct ZeroDenominator : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };
struct OutOfDomain : Error { using Error::Error; };
struct Renormalizable : Error { using Error::Error; };
struct PreperiodicOrbit : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct DepthTooShallow : Error { using Error::Error; };
struct CenterOutside : Error { using Error::Error; };
struct AnchorOutside : Error { using Error::Error; };
struct AnchorAtFold : Error { using Error::Error; };
struct NoEpsilonFound : Error { using Error::Error; };
struct HypothesisNotMet : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };

} // namespace tentlim
