#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace catpath {

// All quantities in the library are exact: arbitrary-precision integers for
// counts and sums, exact rationals for averages and series coefficients.
// Rationals are kept canonical (reduced, positive denominator) at all times.
using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when a request exceeds a configured resource bound (enumeration
/// bound, DP bound, series order). Distinct from std::domain_error so the CLI
/// can map the two to different exit codes.
class bound_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// num/den as a canonical rational. den == 0 is a domain error.
Rat make_rat(Int num, Int den);

bool is_integer(const Rat& q);

/// The integer value of q; domain error unless the denominator is 1.
Int to_integer(const Rat& q);

/// Binomial coefficient; 0 outside 0 <= k <= n.
Int binomial(std::int64_t n, std::int64_t k);

/// "p/q", or just "p" when q == 1.
std::string to_fraction_string(const Rat& q);

/// Fixed-point decimal with exactly `digits` fractional digits, '.' separator,
/// round-half-even at the last digit. digits == 0 renders a rounded integer.
std::string to_decimal_string(const Rat& q, unsigned digits);

double to_double(const Rat& q);

}  // namespace catpath
