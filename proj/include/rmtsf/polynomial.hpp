#pragma once

#include <map>
#include <vector>

#include "rmtsf/rational.hpp"

namespace rmtsf {

class LaurentPolyN;

// Polynomial in the formal matrix size N over Rational. The coefficient
// vector never ends in a zero; the zero polynomial is the empty vector.
class PolyN {
public:
    PolyN() = default;
    PolyN(const Rational& c) { if (c != 0) coeffs_.push_back(c); }  // NOLINT(google-explicit-constructor)
    PolyN(long long c) : PolyN(Rational(c)) {}                      // NOLINT(google-explicit-constructor)

    static PolyN variable() { return from_coeffs({0, 1}); }
    static PolyN from_coeffs(std::vector<Rational> coeffs);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational leading_coeff() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    PolyN& operator+=(const PolyN& o);
    PolyN& operator-=(const PolyN& o);
    PolyN& operator*=(const PolyN& o);
    PolyN& operator*=(const Rational& c);
    friend PolyN operator+(PolyN a, const PolyN& b) { return a += b; }
    friend PolyN operator-(PolyN a, const PolyN& b) { return a -= b; }
    friend PolyN operator*(PolyN a, const PolyN& b) { return a *= b; }
    friend PolyN operator*(PolyN a, const Rational& c) { return a *= c; }
    friend PolyN operator*(const Rational& c, PolyN a) { return a *= c; }
    PolyN operator-() const;
    bool operator==(const PolyN& o) const { return coeffs_ == o.coeffs_; }

    PolyN pow(unsigned e) const;
    Rational eval(const Rational& n) const;

    LaurentPolyN to_laurent() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Laurent polynomial in N: finitely many signed exponents, no stored zeros.
class LaurentPolyN {
public:
    LaurentPolyN() = default;
    LaurentPolyN(const Rational& c) { if (c != 0) coeffs_[0] = c; }  // NOLINT(google-explicit-constructor)
    LaurentPolyN(long long c) : LaurentPolyN(Rational(c)) {}         // NOLINT(google-explicit-constructor)

    static LaurentPolyN term(const Rational& c, int exponent);

    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(int k) const;
    int min_exp() const;  // throws on zero polynomial
    int max_exp() const;

    LaurentPolyN& operator+=(const LaurentPolyN& o);
    LaurentPolyN& operator-=(const LaurentPolyN& o);
    LaurentPolyN& operator*=(const LaurentPolyN& o);
    LaurentPolyN& operator*=(const Rational& c);
    friend LaurentPolyN operator+(LaurentPolyN a, const LaurentPolyN& b) { return a += b; }
    friend LaurentPolyN operator-(LaurentPolyN a, const LaurentPolyN& b) { return a -= b; }
    friend LaurentPolyN operator*(LaurentPolyN a, const LaurentPolyN& b) { return a *= b; }
    friend LaurentPolyN operator*(LaurentPolyN a, const Rational& c) { return a *= c; }
    friend LaurentPolyN operator*(const Rational& c, LaurentPolyN a) { return a *= c; }
    LaurentPolyN operator-() const;
    bool operator==(const LaurentPolyN& o) const { return coeffs_ == o.coeffs_; }

    LaurentPolyN pow(unsigned e) const;
    // multiply by N^k
    LaurentPolyN shifted(int k) const;
    Rational eval(const Rational& n) const;

    // Conversion back to PolyN; throws if a negative exponent is present.
    PolyN to_poly() const;

private:
    std::map<int, Rational> coeffs_;
};

// prod_{m=0}^{count-1} (N + offset + m); monic of degree count.
PolyN rising_factorial_poly(const Rational& offset, unsigned count);

}  // namespace rmtsf
