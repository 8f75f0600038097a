#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace shadowcf {

/// Arbitrary-precision integer and exact rational number types.
/// Rat values are kept canonical (reduced, positive denominator); every
/// constructor path in this project goes through make_rat or GMP arithmetic,
/// both of which guarantee canonical form.
using Int = mpz_class;
using Rat = mpq_class;

/// Builds the canonical rational num/den.  Throws std::domain_error if den == 0.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

/// Parses "p" or "p/q" with optional sign and surrounding whitespace.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(std::string_view text);

/// Canonical reduced-fraction string: "2", "-8/25".
std::string rat_str(const Rat& r);
std::string int_str(const Int& n);

/// Correctly rounded fixed-point decimal with `digits` fractional digits
/// (round half to even).  rat_decimal(5/2, 12) == "2.500000000000".
std::string rat_decimal(const Rat& r, int digits);

/// Largest integer <= r.
Int rat_floor(const Rat& r);

Rat rat_abs(const Rat& r);

}  // namespace shadowcf
