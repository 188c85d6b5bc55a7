#pragma once

#include <gmpxx.h>

#include <string>

namespace lnd {

using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rat = mpq_class;

Rat make_rat(long numerator, long denominator = 1);
Rat parse_rat(const std::string& text);

/// Renders `a/b`, or `a` when the denominator is one.
std::string to_string(const Rat& r);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Rat power(const Rat& base, unsigned exponent);

}  // namespace lnd
