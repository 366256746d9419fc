// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace minskew {

// Base class for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonFiniteError : Error { using Error::Error; };
struct NonHermitianError : Error { using Error::Error; };
struct NotPsdError : Error { using Error::Error; };
struct NonUnitTraceError : Error { using Error::Error; };
struct DimensionMismatchError : Error { using Error::Error; };
struct WrongDimensionError : Error { using Error::Error; };
struct NonRealTraceError : Error { using Error::Error; };
struct NonUnitNormError : Error { using Error::Error; };
struct NotPureError : Error { using Error::Error; };
struct NotUnitaryError : Error { using Error::Error; };
struct ParamOutOfRangeError : Error { using Error::Error; };
struct BasisNotCommutingError : Error { using Error::Error; };
struct InternalInconsistencyError : Error { using Error::Error; };
struct NotConvergedError : Error { using Error::Error; };

// Malformed input files (JSON shape, missing fields); distinct from the
// validation errors above so callers can map them to different exit codes.
struct FormatError : Error { using Error::Error; };

}  // namespace minskew
