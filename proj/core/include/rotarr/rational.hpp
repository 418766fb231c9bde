#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace rotarr {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator (GMP canonicalizes after every operation).
using Rational = mpq_class;
using Integer = mpz_class;

// Signals a domain error in exact arithmetic (division by zero, non-invertible
// element). Distinct from std::invalid_argument so callers can catch it alone.
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed
// input or a zero denominator.
Rational parse_rational(std::string_view text);

// Formats as "p/q" (integers as "p/1").
std::string to_string(const Rational& q);

}  // namespace rotarr
