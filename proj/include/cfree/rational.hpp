#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cfree {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/q" or "-p/q" into a canonical rational.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

Rational pow(const Rational& base, unsigned exponent);

/// True when q = s*s for some rational s (numerator and denominator are squares).
bool is_perfect_square(const Rational& q);

/// Exact square root of a perfect-square rational; throws otherwise.
Rational exact_sqrt(const Rational& q);

/// Nearest long double (to within a couple of ulps).
long double to_long_double(const Rational& q);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace cfree
