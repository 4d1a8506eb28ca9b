#include "rmtsf/rational.hpp"

#include <cctype>

namespace rmtsf {

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt double_factorial(long long n) {
    if (n <= 0) return 1;
    BigInt r = 1;
    for (long long i = n; i > 1; i -= 2) r *= i;
    return r;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // divides exactly: r is always a binomial coefficient
    }
    return r;
}

Rational rising_factorial(const Rational& x, unsigned count) {
    Rational r = 1;
    for (unsigned i = 0; i < count; ++i) r *= x + i;
    return r;
}

Rational pow_rational(const Rational& q, long long e) {
    if (e == 0) return 1;
    if (q == 0) {
        if (e < 0) throw std::domain_error("pow_rational: zero to a negative power");
        return 0;
    }
    Rational base = e < 0 ? Rational(1) / q : q;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Rational r = 1;
    while (n > 0) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

Rational parse_rational(std::string_view text) {
    size_t a = 0, b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
    std::string s(text.substr(a, b - a));
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    }
}

std::string to_string(const Rational& q) {
    return q.str();
}

}  // namespace rmtsf
