#pragma once

#include <stdexcept>
#include <string>

namespace homlie {

/// Structure tensors or vectors of incompatible sizes.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called on inputs outside its domain (non-ideal, non-perfect algebra, ...).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The relation enumeration would exceed the configured dimension cap.
class CapExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A computed object failed an identity that the theory guarantees.
/// Raised by per-instance audits; it means the construction is wrong.
class AuditFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed algebra or action file.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace homlie
