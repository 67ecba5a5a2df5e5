#pragma once

#include <gmpxx.h>

#include <string>

namespace mirror {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "n", "-n", "n/d" with optional surrounding spaces.
Rational parse_rational(const std::string& text);
// n/d in canonical form.
Rational frac(long n, long d);
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

Integer factorial(long n);
Rational inv_factorial(long n);
// n!! for odd n, extended to negative odd n by n!! = (n+2)!!/(n+2).
Rational odd_double_factorial(long n);
Rational pow(const Rational& x, long e);

bool is_integer(const Rational& x);
// Square root when x is the square of a rational.
bool rational_sqrt(const Rational& x, Rational& root);

long floor_div(long a, long b);
long pos_mod(long a, long b);
long gcd_long(long a, long b);

}  // namespace mirror
