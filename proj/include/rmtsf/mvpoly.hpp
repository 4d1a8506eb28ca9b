#pragma once

#include <map>
#include <vector>

#include "rmtsf/rational.hpp"

namespace rmtsf {

// Sparse multivariate polynomial over Rational in a fixed number of
// variables. Small helper for generating-function identities and for
// expanding symmetric polynomials in few variables.
class MvPoly {
public:
    explicit MvPoly(unsigned nvars) : nvars_(nvars) {}
    MvPoly(unsigned nvars, const Rational& c) : nvars_(nvars) {
        if (c != 0) terms_[std::vector<unsigned>(nvars, 0)] = c;
    }

    static MvPoly variable(unsigned nvars, unsigned index);
    static MvPoly monomial(std::vector<unsigned> exps, const Rational& c);

    unsigned nvars() const { return nvars_; }
    const std::map<std::vector<unsigned>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const std::vector<unsigned>& exps) const;

    MvPoly& operator+=(const MvPoly& o);
    MvPoly& operator-=(const MvPoly& o);
    MvPoly& operator*=(const MvPoly& o);
    MvPoly& operator*=(const Rational& c);
    friend MvPoly operator+(MvPoly a, const MvPoly& b) { return a += b; }
    friend MvPoly operator-(MvPoly a, const MvPoly& b) { return a -= b; }
    friend MvPoly operator*(MvPoly a, const MvPoly& b) { return a *= b; }
    friend MvPoly operator*(MvPoly a, const Rational& c) { return a *= c; }
    bool operator==(const MvPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    MvPoly truncated(unsigned max_total_degree) const;
    Rational eval(const std::vector<Rational>& x) const;

private:
    unsigned nvars_;
    std::map<std::vector<unsigned>, Rational> terms_;
};

}  // namespace rmtsf
