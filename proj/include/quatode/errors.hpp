#pragma once

#include <stdexcept>
#include <string>

namespace quatode {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands have incompatible shapes.
struct DimensionError : Error {
    using Error::Error;
};

/// Input exceeds the factorial-enumeration size cap.
struct SizeCapError : Error {
    using Error::Error;
};

/// A matrix required to be invertible is numerically rank-deficient.
struct SingularMatrixError : Error {
    using Error::Error;
};

/// Malformed text or JSON input.
struct ParseError : Error {
    using Error::Error;
};

/// A numerical contract was violated (non-convergence, residue bounds, ...).
struct NumericalError : Error {
    using Error::Error;
};

/// D + N split where D and N do not commute, or N is not nilpotent.
struct NonCommutingSplitError : Error {
    using Error::Error;
};

/// Diagonal coefficient a_i(t) does not commute with its integral.
struct CommutativityError : Error {
    using Error::Error;
};

} // namespace quatode
