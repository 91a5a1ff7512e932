#ifndef ALGVOL_RATIONAL_HPP
#define ALGVOL_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace algvol {

using Int = mpz_class;
using Rational = mpq_class;

// den == 0 is an input_error.  Result is canonical (lowest terms, den > 0).
Rational make_rational(const Int& num, const Int& den);
Rational make_rational(long num, long den = 1);

// Exact parse of "p/q", "-3", "0.25", "1e-8", "2.5e3".
Rational parse_rational(std::string_view text);

// Canonical GMP string, "p/q" with "/1" omitted.
std::string rational_str(const Rational& x);

Rational rational_pow(const Rational& base, long exp);

Int floor_int(const Rational& x);
Int ceil_int(const Rational& x);
bool is_integer(const Rational& x);

// 10^k for k of either sign.
Rational pow10(long k);

double to_double(const Rational& x);

// Decimal rendering with exactly `digits` fractional digits, rounding the
// value half away from zero.  digits >= 1.
std::string decimal_string(const Rational& x, int digits);

// The rational with the smallest denominator (then smallest |numerator|)
// inside the closed interval [lo, hi].
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

// gcd in Q: largest positive rational dividing both (0 if both are 0).
Rational rational_gcd(const Rational& a, const Rational& b);

// Positive rational content of a coordinate vector, 0 for the zero vector.
Rational rational_content(const std::vector<Rational>& v);

Int int_gcd(const Int& a, const Int& b);
Int int_lcm(const Int& a, const Int& b);

} // namespace algvol

#endif
