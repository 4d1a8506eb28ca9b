#pragma once

#include <map>

#include "rmtsf/rational.hpp"

namespace rmtsf {

// Exact value of the form  rational * prod_f Gamma(f)^{e_f}  with each f a
// canonical residue in (0,1). Gamma at rational arguments reduces to this
// form via the functional equation; sums are only defined between values
// carrying the same Gamma signature, which is all the determinant and
// prefactor algebra in this library ever needs. A value with an empty
// signature is an ordinary rational.
class GammaProduct {
public:
    GammaProduct() : coeff_(0) {}
    GammaProduct(const Rational& c) : coeff_(c) {}  // NOLINT(google-explicit-constructor)

    // Gamma(q); throws at the poles (q a nonpositive integer).
    static GammaProduct gamma(const Rational& q);

    bool is_zero() const { return coeff_ == 0; }
    const Rational& coefficient() const { return coeff_; }

    GammaProduct& operator*=(const GammaProduct& o);
    GammaProduct& operator/=(const GammaProduct& o);
    GammaProduct& operator+=(const GammaProduct& o);
    GammaProduct& operator-=(const GammaProduct& o);
    friend GammaProduct operator*(GammaProduct a, const GammaProduct& b) { return a *= b; }
    friend GammaProduct operator/(GammaProduct a, const GammaProduct& b) { return a /= b; }
    friend GammaProduct operator+(GammaProduct a, const GammaProduct& b) { return a += b; }
    friend GammaProduct operator-(GammaProduct a, const GammaProduct& b) { return a -= b; }
    GammaProduct operator-() const;

    // Requires all Gamma factors to have cancelled.
    Rational to_rational() const;

private:
    Rational coeff_;
    std::map<Rational, long long> exps_;  // residue in (0,1) -> exponent, no zeros
};

// Determinant of a matrix whose nonzero entries share one Gamma signature.
GammaProduct det_gamma(std::vector<std::vector<GammaProduct>> m);

}  // namespace rmtsf
