#pragma once

#include <stdexcept>
#include <string>

namespace eistrace {

// Requesting a coefficient at or beyond a series truncation bound.
struct TruncationError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Violated precondition of a series operation (non-unit leading
// coefficient, nonzero constant term in exp, ...).
struct SeriesDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Exact cyclotomic arithmetic requested beyond the supported conductor.
struct ConductorLimitError : std::domain_error {
  using std::domain_error::domain_error;
};

// Malformed or unusable divisor (parse error, zero-sum violation, ...).
struct DivisorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace eistrace
