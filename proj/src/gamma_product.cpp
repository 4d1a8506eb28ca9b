#include "rmtsf/gamma_product.hpp"

#include <vector>

namespace rmtsf {

GammaProduct GammaProduct::gamma(const Rational& q) {
    if (is_integer(q)) {
        if (q <= 0) throw std::domain_error("GammaProduct::gamma: pole at nonpositive integer");
        GammaProduct g(Rational(1));
        BigInt n = numerator(q);
        for (BigInt i = 2; i < n; ++i) g.coeff_ *= i;
        return g;
    }
    BigInt m = floor_rational(q);
    Rational f = q - Rational(m);  // residue in (0,1)
    GammaProduct g(Rational(1));
    if (m >= 0) {
        for (BigInt i = 0; i < m; ++i) g.coeff_ *= f + Rational(i);
    } else {
        for (BigInt i = 1; i <= -m; ++i) g.coeff_ /= f - Rational(i);
    }
    g.exps_[f] = 1;
    return g;
}

GammaProduct& GammaProduct::operator*=(const GammaProduct& o) {
    coeff_ *= o.coeff_;
    if (coeff_ == 0) {
        exps_.clear();
        return *this;
    }
    for (const auto& [f, e] : o.exps_) {
        long long& slot = exps_[f];
        slot += e;
        if (slot == 0) exps_.erase(f);
    }
    return *this;
}

GammaProduct& GammaProduct::operator/=(const GammaProduct& o) {
    if (o.coeff_ == 0) throw std::domain_error("GammaProduct: division by zero");
    coeff_ /= o.coeff_;
    if (coeff_ == 0) {
        exps_.clear();
        return *this;
    }
    for (const auto& [f, e] : o.exps_) {
        long long& slot = exps_[f];
        slot -= e;
        if (slot == 0) exps_.erase(f);
    }
    return *this;
}

GammaProduct& GammaProduct::operator+=(const GammaProduct& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (exps_ != o.exps_)
        throw std::domain_error("GammaProduct: sum of incompatible Gamma signatures");
    coeff_ += o.coeff_;
    if (coeff_ == 0) exps_.clear();
    return *this;
}

GammaProduct& GammaProduct::operator-=(const GammaProduct& o) {
    return *this += -o;
}

GammaProduct GammaProduct::operator-() const {
    GammaProduct r = *this;
    r.coeff_ = -r.coeff_;
    return r;
}

Rational GammaProduct::to_rational() const {
    if (!exps_.empty())
        throw std::domain_error("GammaProduct::to_rational: uncancelled Gamma factors");
    return coeff_;
}

GammaProduct det_gamma(std::vector<std::vector<GammaProduct>> m) {
    const size_t n = m.size();
    GammaProduct det{Rational(1)};
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return GammaProduct{Rational(0)};
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            GammaProduct f = m[row][col] / m[col][col];
            for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

}  // namespace rmtsf
