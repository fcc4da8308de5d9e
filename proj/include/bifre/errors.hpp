#pragma once

#include <stdexcept>

namespace bifre {

/// Dimensions of an instance, vector or index set are inconsistent.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A scalar lies outside the unit interval, or has a zero denominator.
class RangeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A scalar string or problem document could not be parsed.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The instance is too large for exhaustive enumeration under the
/// configured cap. Never raised silently: callers either get the full
/// answer or this error.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation was invoked outside its stated precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace bifre
