#include "rmtsf/polynomial.hpp"

#include <algorithm>

namespace rmtsf {

PolyN PolyN::from_coeffs(std::vector<Rational> coeffs) {
    PolyN p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void PolyN::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyN& PolyN::operator+=(const PolyN& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

PolyN& PolyN::operator-=(const PolyN& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

PolyN& PolyN::operator*=(const PolyN& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

PolyN& PolyN::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

PolyN PolyN::operator-() const {
    PolyN r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

PolyN PolyN::pow(unsigned e) const {
    PolyN r = Rational(1);
    PolyN base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rational PolyN::eval(const Rational& n) const {
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * n + *it;
    return r;
}

LaurentPolyN PolyN::to_laurent() const {
    LaurentPolyN r;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) r += LaurentPolyN::term(coeffs_[i], static_cast<int>(i));
    return r;
}

LaurentPolyN LaurentPolyN::term(const Rational& c, int exponent) {
    LaurentPolyN r;
    if (c != 0) r.coeffs_[exponent] = c;
    return r;
}

Rational LaurentPolyN::coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

int LaurentPolyN::min_exp() const {
    if (coeffs_.empty()) throw std::domain_error("min_exp of zero Laurent polynomial");
    return coeffs_.begin()->first;
}

int LaurentPolyN::max_exp() const {
    if (coeffs_.empty()) throw std::domain_error("max_exp of zero Laurent polynomial");
    return coeffs_.rbegin()->first;
}

LaurentPolyN& LaurentPolyN::operator+=(const LaurentPolyN& o) {
    for (const auto& [e, c] : o.coeffs_) {
        Rational& slot = coeffs_[e];
        slot += c;
        if (slot == 0) coeffs_.erase(e);
    }
    return *this;
}

LaurentPolyN& LaurentPolyN::operator-=(const LaurentPolyN& o) {
    for (const auto& [e, c] : o.coeffs_) {
        Rational& slot = coeffs_[e];
        slot -= c;
        if (slot == 0) coeffs_.erase(e);
    }
    return *this;
}

LaurentPolyN& LaurentPolyN::operator*=(const LaurentPolyN& o) {
    std::map<int, Rational> out;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : o.coeffs_) out[e1 + e2] += c1 * c2;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    coeffs_ = std::move(out);
    return *this;
}

LaurentPolyN& LaurentPolyN::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [e, x] : coeffs_) x *= c;
    return *this;
}

LaurentPolyN LaurentPolyN::operator-() const {
    LaurentPolyN r = *this;
    for (auto& [e, x] : r.coeffs_) x = -x;
    return r;
}

LaurentPolyN LaurentPolyN::pow(unsigned e) const {
    LaurentPolyN r = Rational(1);
    LaurentPolyN base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

LaurentPolyN LaurentPolyN::shifted(int k) const {
    LaurentPolyN r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
    return r;
}

Rational LaurentPolyN::eval(const Rational& n) const {
    if (n == 0 && !coeffs_.empty() && coeffs_.begin()->first < 0)
        throw std::domain_error("LaurentPolyN::eval: zero substituted into a negative exponent");
    Rational r = 0;
    for (const auto& [e, c] : coeffs_) r += c * pow_rational(n, e);
    return r;
}

PolyN LaurentPolyN::to_poly() const {
    if (!coeffs_.empty() && coeffs_.begin()->first < 0)
        throw std::domain_error("LaurentPolyN::to_poly: negative exponent present");
    std::vector<Rational> out;
    if (!coeffs_.empty()) out.resize(static_cast<size_t>(coeffs_.rbegin()->first) + 1, Rational(0));
    for (const auto& [e, c] : coeffs_) out[static_cast<size_t>(e)] = c;
    return PolyN::from_coeffs(std::move(out));
}

PolyN rising_factorial_poly(const Rational& offset, unsigned count) {
    PolyN r = Rational(1);
    for (unsigned m = 0; m < count; ++m)
        r *= PolyN::from_coeffs({offset + m, Rational(1)});
    return r;
}

}  // namespace rmtsf
