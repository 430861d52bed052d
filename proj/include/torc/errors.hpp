#pragma once

#include <stdexcept>
#include <string>

namespace torc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadParameter : Error { using Error::Error; };
struct NotSimple : Error { using Error::Error; };
struct InconsistentLattice : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct NotAComplex : Error { using Error::Error; };
struct CoefficientMismatch : Error { using Error::Error; };
struct NotASubspacePattern : Error { using Error::Error; };
struct VertexMismatch : Error { using Error::Error; };
struct ValidationFailed : Error { using Error::Error; };
struct NonFieldCoefficients : Error { using Error::Error; };

}  // namespace torc
