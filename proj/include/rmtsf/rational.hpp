#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rmtsf {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps lowest terms and a positive
// denominator, which is exactly the representation contract we need.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Floor of a rational as a BigInt (exact, works for negatives).
inline BigInt floor_rational(const Rational& q) {
    BigInt n = numerator(q), d = denominator(q);
    BigInt f = n / d;
    if (n < 0 && n % d != 0) --f;
    return f;
}

BigInt factorial(unsigned n);
BigInt double_factorial(long long n);  // n!! with (-1)!! = 1
BigInt binomial(unsigned n, unsigned k);

// x(x+1)...(x+count-1), exact.
Rational rising_factorial(const Rational& x, unsigned count);

// q^e with negative exponents allowed for nonzero q.
Rational pow_rational(const Rational& q, long long e);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace rmtsf
