#pragma once

#include <stdexcept>
#include <string>

namespace signedperm {

// Malformed one-line text or triple.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Rank query or index outside the admissible range.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// A triple that fails the validity predicate for its flavor.
class InvalidTriple : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Brute-force enumeration refused because n exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A set has several minimal upper bounds.
class NoSupremum : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal consistency check failed; indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace signedperm
