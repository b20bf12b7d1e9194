#pragma once

#include <stdexcept>
#include <string>

namespace qident {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A series inversion was attempted on a series whose constant term is not +1 or -1.
struct NonUnitConstantTerm : Error {
    using Error::Error;
};

/// A substitution would produce a factor with a negative q-exponent.
struct NegativeExponent : Error {
    using Error::Error;
};

/// An infinite Pochhammer product was requested for a monomial with exponent < 1.
struct NonConvergentProduct : Error {
    using Error::Error;
};

/// A coefficient comparison or access beyond the guaranteed truncation order.
struct InsufficientOrder : Error {
    using Error::Error;
};

/// Partition enumeration was requested above the configured ceiling.
struct CeilingExceeded : Error {
    using Error::Error;
};

/// Class parameters outside the domain the class is defined for.
struct InvalidClassParameters : Error {
    using Error::Error;
};

/// Identity parameters outside the identity's stated domain.
struct InvalidIdentityParameters : Error {
    using Error::Error;
};

/// The marker part r does not occur exactly n times in the input partition.
struct MarkerMultiplicityMismatch : Error {
    using Error::Error;
};

/// A residual part exceeds the n*k column capacity.
struct ColumnOverflow : Error {
    using Error::Error;
};

/// Some part of the input is <= r, so the marker strip cannot be removed.
struct PartTooSmall : Error {
    using Error::Error;
};

/// The input partition does not have exactly n parts.
struct PartCountMismatch : Error {
    using Error::Error;
};

/// A nested-sum evaluation enumerated more tuples than the configured budget.
struct TupleBudgetExceeded : Error {
    using Error::Error;
};

} // namespace qident
