#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace pqcomb {

// Exact rational. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation we perform through it.
using Scalar = mpq_class;

// Integer power; negative exponents require a nonzero base.
Scalar pow(const Scalar& base, long exponent);

// m(m-1)/2 for every integer m, including negative m.
constexpr long choose2(long m) { return m * (m - 1) / 2; }

// Ordinary binomial coefficient C(n, k) for n >= 0; zero outside 0 <= k <= n.
Scalar classical_binomial(long n, long k);

// n! as an exact integer.
Scalar classical_factorial(long n);

// Parses "[-]digits[/digits]" with a positive denominator. Throws ParseError.
Scalar parse_rational(std::string_view text);

// "a/b", or "a" when the denominator is 1.
std::string to_string(const Scalar& value);

// |a - b| <= tol * |a|, evaluated exactly (a == 0 falls back to |b| <= tol).
bool within_relative(const Scalar& a, const Scalar& b, const Scalar& tol);

// Scientific notation with the given number of significant digits, for
// human-readable summaries of large rationals (e.g. "4.21000e-01").
std::string to_decimal(const Scalar& value, int digits = 6);

// Exact relative error |a - b| / |a| (or |b| when a == 0).
Scalar relative_error(const Scalar& a, const Scalar& b);

// Parses a decimal such as "1e-9" or "0.000001" into an exact rational.
Scalar parse_decimal(std::string_view text);

}  // namespace pqcomb
