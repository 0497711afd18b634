#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace anick {

// Exact arbitrary-precision arithmetic. No floating point anywhere:
// cohomology ranks must be exact.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denom(const Rational& r) { return boost::multiprecision::denominator(r); }

// "7", "-3/2"; denominator omitted when 1.
std::string to_string(const Rational& r);

// Accepts optional sign, decimal digits, optional "/digits". Throws InputError.
Rational parse_rational(const std::string& s);

BigInt binomial(long n, long k);
BigInt factorial(long n);
// n(n-1)...(n-k+1); zero when k > n >= 0.
BigInt falling_factorial(long n, long k);

}  // namespace anick
