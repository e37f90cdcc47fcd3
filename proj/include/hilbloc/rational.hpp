#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hilbloc {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise; q > 0 and gcd(p, q) = 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws Error on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// num/den in canonical form; den != 0. (mpq_class(num, den) does not canonicalize.)
Rational ratio(long num, long den);

/// Generalized binomial x(x-1)...(x-k+1)/k!. Zero for k < 0.
Rational binomial(const Rational& x, int k);

Integer factorial(int n);

inline bool is_unit(const Rational& q) { return sgn(q) != 0; }
inline Rational inverse_unit(const Rational& q) { return Rational(1) / q; }

}  // namespace hilbloc
