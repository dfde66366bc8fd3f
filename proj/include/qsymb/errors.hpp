#pragma once

#include <stdexcept>
#include <string>

namespace qsymb {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input violates a structural invariant (bad word, bad shape, non-standard
/// tableau, ...).
struct MalformedInput : Error {
    using Error::Error;
};

/// An enumeration would exceed the configured caps.
struct SizeLimit : Error {
    using Error::Error;
};

/// Two polynomials with different alphabet specs were combined.
struct AlphabetMismatch : Error {
    using Error::Error;
};

/// A polynomial handed to the Schur expander is not symmetric.
struct NotSymmetric : Error {
    using Error::Error;
};

/// A polynomial handed to a fundamental-basis expander is not quasisymmetric.
struct NotQuasisymmetric : Error {
    using Error::Error;
};

/// Same, for the x0-anchored fundamental basis.
struct NotQuasisymmetricB : NotQuasisymmetric {
    using NotQuasisymmetric::NotQuasisymmetric;
};

/// Parameters passed to a verification case are invalid for that identity.
struct InvalidParams : Error {
    using Error::Error;
};

} // namespace qsymb
