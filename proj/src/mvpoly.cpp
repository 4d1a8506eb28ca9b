#include "rmtsf/mvpoly.hpp"

#include <numeric>

namespace rmtsf {

MvPoly MvPoly::variable(unsigned nvars, unsigned index) {
    if (index >= nvars) throw std::invalid_argument("MvPoly::variable: index out of range");
    MvPoly p(nvars);
    std::vector<unsigned> e(nvars, 0);
    e[index] = 1;
    p.terms_[std::move(e)] = 1;
    return p;
}

MvPoly MvPoly::monomial(std::vector<unsigned> exps, const Rational& c) {
    MvPoly p(static_cast<unsigned>(exps.size()));
    if (c != 0) p.terms_[std::move(exps)] = c;
    return p;
}

Rational MvPoly::coeff(const std::vector<unsigned>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

MvPoly& MvPoly::operator+=(const MvPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        Rational& slot = terms_[e];
        slot += c;
        if (slot == 0) terms_.erase(e);
    }
    return *this;
}

MvPoly& MvPoly::operator-=(const MvPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        Rational& slot = terms_[e];
        slot -= c;
        if (slot == 0) terms_.erase(e);
    }
    return *this;
}

MvPoly& MvPoly::operator*=(const MvPoly& o) {
    std::map<std::vector<unsigned>, Rational> out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<unsigned> e(nvars_);
            for (unsigned i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            out[std::move(e)] += c1 * c2;
        }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    terms_ = std::move(out);
    return *this;
}

MvPoly& MvPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

MvPoly MvPoly::truncated(unsigned max_total_degree) const {
    MvPoly p(nvars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0u) <= max_total_degree) p.terms_[e] = c;
    return p;
}

Rational MvPoly::eval(const std::vector<Rational>& x) const {
    if (x.size() != nvars_) throw std::invalid_argument("MvPoly::eval: wrong variable count");
    Rational r = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (unsigned i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
        r += t;
    }
    return r;
}

}  // namespace rmtsf
