#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace magnetic {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "n" or "n/d" with optional sign; result is canonical.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

// "n" when the denominator is 1, "n/d" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// n/d in lowest terms with a positive denominator.
Rational frac(long n, long d);

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

// v_p of a nonzero value; throws DomainError on zero.
long valuation(const Integer& z, unsigned long p);
long valuation(const Rational& r, unsigned long p);

Integer lcm_of_denominators(std::span<const Rational> values);

Integer ipow(const Integer& base, unsigned long e);
Rational pow(const Rational& base, long e);

}  // namespace magnetic
