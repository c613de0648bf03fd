#pragma once

#include <gmpxx.h>

#include <string>

namespace feec {

// Arbitrary-precision rational. mpq_class keeps values in lowest terms with a
// positive denominator, and zero as 0/1, as long as every value built from raw
// numerator/denominator parts goes through make_scalar().
using ExactScalar = mpq_class;
using ExactInteger = mpz_class;

ExactScalar make_scalar(long numerator, long denominator = 1);
ExactScalar make_scalar(const ExactInteger& numerator, const ExactInteger& denominator);

/// Renders as "p" for integers and "p/q" otherwise.
std::string to_string(const ExactScalar& value);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
ExactScalar parse_scalar(const std::string& text);

inline bool is_integer(const ExactScalar& value) { return value.get_den() == 1; }

}  // namespace feec
