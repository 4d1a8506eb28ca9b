#include "rmtsf/symfun.hpp"

#include "rmtsf/characters.hpp"

namespace rmtsf {

namespace {

// h_0..h_max via r*h_r = sum_{i=1}^r h_{r-i} p_i
std::vector<Rational> complete_homogeneous_up_to(unsigned max, const PointList& x) {
    std::vector<Rational> p(max + 1, Rational(0));  // power sums, p[0] unused
    for (unsigned i = 1; i <= max; ++i)
        for (const Rational& xi : x) p[i] += pow_rational(xi, i);
    std::vector<Rational> h(max + 1, Rational(0));
    h[0] = 1;
    for (unsigned r = 1; r <= max; ++r) {
        Rational s = 0;
        for (unsigned i = 1; i <= r; ++i) s += h[r - i] * p[i];
        h[r] = s / r;
    }
    return h;
}

Rational det_rational(std::vector<std::vector<Rational>> m) {
    const size_t n = m.size();
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

}  // namespace

Rational complete_homogeneous_eval(unsigned r, const PointList& x) {
    return complete_homogeneous_up_to(r, x)[r];
}

Rational schur_eval(const Partition& lambda, const PointList& x) {
    if (lambda.empty()) return 1;
    if (lambda.length() > x.size()) return 0;
    const unsigned L = lambda.length();
    const unsigned hmax = lambda.part(1) + L - 1;
    auto h = complete_homogeneous_up_to(hmax, x);
    std::vector<std::vector<Rational>> m(L, std::vector<Rational>(L));
    for (unsigned i = 1; i <= L; ++i)
        for (unsigned j = 1; j <= L; ++j) {
            long long idx = static_cast<long long>(lambda.part(i)) + j - i;
            m[i - 1][j - 1] = (idx < 0) ? Rational(0) : h[static_cast<size_t>(idx)];
        }
    return det_rational(std::move(m));
}

BigInt hook_product(const Partition& lambda) {
    BigInt hooks = 1;
    Partition lc = conjugate(lambda);
    for (unsigned i = 1; i <= lambda.length(); ++i)
        for (unsigned j = 1; j <= lambda.part(i); ++j)
            hooks *= (lambda.part(i) - j) + (lc.part(j) - i) + 1;
    return hooks;
}

PolyN schur_at_ones(const Partition& lambda) {
    PolyN p = Rational(1);
    for (int c : contents(lambda)) p *= PolyN::from_coeffs({Rational(c), Rational(1)});
    return p * Rational(BigInt(1), hook_product(lambda));
}

Rational power_eval(const Partition& mu, const PointList& x) {
    Rational r = 1;
    for (unsigned part : mu.parts()) {
        Rational s = 0;
        for (const Rational& xi : x) s += pow_rational(xi, part);
        r *= s;
    }
    return r;
}

BasisExpansion power_to_schur(const Partition& mu) {
    BasisExpansion e;
    e.basis = "schur";
    for (const Partition& lambda : partitions_of(mu.weight())) {
        long long chi = character(lambda, mu);
        if (chi != 0) e.terms.emplace_back(lambda, Rational(chi));
    }
    return e;
}

PolyN c_lambda(const Partition& lambda) {
    PolyN p = Rational(1);
    for (int c : contents(lambda)) p *= PolyN::from_coeffs({Rational(c), Rational(1)});
    return p;
}

PolyN g_ratio(const Partition& lambda, const Rational& gamma) {
    if (gamma <= -1) throw std::invalid_argument("g_ratio: gamma must be > -1");
    PolyN p = Rational(1);
    for (unsigned j = 1; j <= lambda.length(); ++j)
        p *= rising_factorial_poly(gamma + 1 - static_cast<long long>(j), lambda.part(j));
    return p;
}

namespace {

// h_r in nvars variables as an explicit polynomial: all monomials of degree r.
MvPoly complete_homogeneous_mvpoly(unsigned r, unsigned nvars) {
    if (nvars == 0) return r == 0 ? MvPoly(0, Rational(1)) : MvPoly(0);
    MvPoly out(nvars);
    std::vector<unsigned> e(nvars, 0);
    auto rec = [&](auto&& self, unsigned var, unsigned rest) -> void {
        if (var + 1 == nvars) {
            e[var] = rest;
            out += MvPoly::monomial(e, Rational(1));
            e[var] = 0;
            return;
        }
        for (unsigned k = 0; k <= rest; ++k) {
            e[var] = k;
            self(self, var + 1, rest - k);
        }
        e[var] = 0;
    };
    rec(rec, 0, r);
    return out;
}

}  // namespace

MvPoly schur_mvpoly(const Partition& lambda, unsigned nvars) {
    if (lambda.empty()) return MvPoly(nvars, Rational(1));
    if (lambda.length() > nvars) return MvPoly(nvars);
    const unsigned L = lambda.length();
    std::vector<MvPoly> h;
    for (unsigned r = 0; r <= lambda.part(1) + L - 1; ++r)
        h.push_back(complete_homogeneous_mvpoly(r, nvars));
    // Jacobi-Trudi determinant by cofactor expansion (L is tiny here)
    std::vector<std::vector<MvPoly>> m(L, std::vector<MvPoly>(L, MvPoly(nvars)));
    for (unsigned i = 1; i <= L; ++i)
        for (unsigned j = 1; j <= L; ++j) {
            long long idx = static_cast<long long>(lambda.part(i)) + j - i;
            if (idx >= 0) m[i - 1][j - 1] = h[static_cast<size_t>(idx)];
        }
    std::vector<unsigned> cols(L);
    for (unsigned j = 0; j < L; ++j) cols[j] = j;
    MvPoly det(nvars);
    auto perm = [&](auto&& self, unsigned row, std::vector<unsigned>& avail, MvPoly acc, int sign) -> void {
        if (row == L) {
            det += sign > 0 ? acc : acc * Rational(-1);
            return;
        }
        for (size_t k = 0; k < avail.size(); ++k) {
            unsigned col = avail[k];
            if (m[row][col].is_zero()) continue;
            std::vector<unsigned> rest = avail;
            rest.erase(rest.begin() + static_cast<long>(k));
            self(self, row + 1, rest, acc * m[row][col], sign * ((k % 2 == 0) ? 1 : -1));
        }
    };
    perm(perm, 0, cols, MvPoly(nvars, Rational(1)), 1);
    return det;
}

}  // namespace rmtsf
