#pragma once

#include <stdexcept>
#include <string>

namespace magnetic {

// Malformed input: bad syntax, inadmissible parameters, unknown names.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Request asks for information beyond what a truncated series knows.
class PrecisionError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Mathematically undefined operation (inverse of zero, delta^-1 with a q^0 term, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace magnetic
