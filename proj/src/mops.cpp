#include "rmtsf/mops.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "rmtsf/gamma_product.hpp"

namespace rmtsf {

namespace {

constexpr unsigned kMaxUnivariateDegree = 256;

void check_gamma(const Rational& g, const char* what) {
    if (g <= -1) throw std::invalid_argument(std::string(what) + " must be > -1");
}

}  // namespace

EnsembleSpec EnsembleSpec::hermite() { return EnsembleSpec{Kind::hermite, 0, 0, 0}; }

EnsembleSpec EnsembleSpec::laguerre(const Rational& g) {
    check_gamma(g, "laguerre gamma");
    return EnsembleSpec{Kind::laguerre, g, 0, 0};
}

EnsembleSpec EnsembleSpec::jacobi(const Rational& g1, const Rational& g2) {
    check_gamma(g1, "jacobi gamma1");
    check_gamma(g2, "jacobi gamma2");
    return EnsembleSpec{Kind::jacobi, 0, g1, g2};
}

std::string EnsembleSpec::name() const {
    switch (kind) {
        case Kind::hermite: return "hermite";
        case Kind::laguerre: return "laguerre";
        case Kind::jacobi: return "jacobi";
    }
    return "?";
}

Rational UnivariateOP::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
    return r;
}

namespace {

std::vector<Rational> hermite_coeffs(unsigned n) {
    // monic recurrence He_{n+1} = x He_n - n He_{n-1}
    std::vector<Rational> prev{1}, cur{0, 1};
    if (n == 0) return prev;
    for (unsigned m = 1; m < n; ++m) {
        std::vector<Rational> next(m + 2, Rational(0));
        for (size_t j = 0; j < cur.size(); ++j) next[j + 1] += cur[j];
        for (size_t j = 0; j < prev.size(); ++j) next[j] -= Rational(m) * prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<Rational> laguerre_coeffs(unsigned n, const Rational& gamma) {
    std::vector<Rational> c(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        Rational v = rising_factorial(gamma + j + 1, n - j) /
                     (Rational(factorial(j)) * Rational(factorial(n - j)));
        c[j] = (j % 2 == 0) ? v : -v;
    }
    return c;
}

std::vector<Rational> jacobi_coeffs(unsigned n, const Rational& g1, const Rational& g2) {
    std::vector<Rational> c(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        Rational v = rising_factorial(g1 + j + 1, n - j) * rising_factorial(g1 + g2 + n + 1, j) /
                     (Rational(factorial(j)) * Rational(factorial(n - j)));
        c[j] = (j % 2 == 0) ? v : -v;
    }
    return c;
}

}  // namespace

const UnivariateOP& univariate_coeffs(const EnsembleSpec& family, unsigned n) {
    if (n > kMaxUnivariateDegree)
        throw std::invalid_argument("univariate_coeffs: degree exceeds bound");
    using Key = std::tuple<int, Rational, Rational, unsigned>;
    static std::mutex mu;
    static std::map<Key, UnivariateOP> cache;
    Key key{static_cast<int>(family.kind),
            family.is(EnsembleSpec::Kind::laguerre) ? family.gamma : family.gamma1,
            family.gamma2, n};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
        UnivariateOP op;
        op.family = family;
        op.degree = n;
        switch (family.kind) {
            case EnsembleSpec::Kind::hermite: op.coeffs = hermite_coeffs(n); break;
            case EnsembleSpec::Kind::laguerre: op.coeffs = laguerre_coeffs(n, family.gamma); break;
            case EnsembleSpec::Kind::jacobi: op.coeffs = jacobi_coeffs(n, family.gamma1, family.gamma2); break;
        }
        it = cache.emplace(std::move(key), std::move(op)).first;
    }
    return it->second;
}

namespace {

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

Rational vandermonde(const PointList& x) {
    Rational v = 1;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j) v *= x[i] - x[j];
    return v;
}

void check_distinct(const PointList& x, const char* what) {
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            if (x[i] == x[j]) throw std::invalid_argument(std::string(what) + ": coincident points");
}

}  // namespace

Rational mop_eval(const EnsembleSpec& family, const Partition& lambda, const PointList& x) {
    const unsigned N = static_cast<unsigned>(x.size());
    if (N == 0) throw std::invalid_argument("mop_eval: empty point list");
    if (lambda.length() > N) throw std::invalid_argument("mop_eval: l(lambda) > number of points");
    check_distinct(x, "mop_eval");
    std::vector<std::vector<Rational>> m(N, std::vector<Rational>(N));
    for (unsigned i = 1; i <= N; ++i) {
        const UnivariateOP& phi = univariate_coeffs(family, lambda.part(i) + N - i);
        for (unsigned j = 1; j <= N; ++j) m[i - 1][j - 1] = phi.eval(x[j - 1]);
    }
    return det_rational(std::move(m)) / vandermonde(x);
}

namespace {

// D^{(H)}_{lambda nu}: entries 1/((d/2)!) for d = lambda_j - nu_k - j + k even >= 0.
Rational det_d_hermite(const Partition& lambda, const Partition& nu) {
    const unsigned L = std::max(lambda.length(), 1u);
    std::vector<std::vector<Rational>> m(L, std::vector<Rational>(L, Rational(0)));
    for (unsigned j = 1; j <= L; ++j)
        for (unsigned k = 1; k <= L; ++k) {
            long long d = static_cast<long long>(lambda.part(j)) - nu.part(k) - j + k;
            if (d >= 0 && d % 2 == 0)
                m[j - 1][k - 1] = Rational(BigInt(1), factorial(static_cast<unsigned>(d / 2)));
        }
    return det_rational(std::move(m));
}

Rational det_d_laguerre(const Partition& lambda, const Partition& nu) {
    const unsigned L = std::max(lambda.length(), 1u);
    std::vector<std::vector<Rational>> m(L, std::vector<Rational>(L, Rational(0)));
    for (unsigned i = 1; i <= L; ++i)
        for (unsigned j = 1; j <= L; ++j) {
            long long d = static_cast<long long>(lambda.part(i)) - nu.part(j) - i + j;
            if (d >= 0) m[i - 1][j - 1] = Rational(BigInt(1), factorial(static_cast<unsigned>(d)));
        }
    return det_rational(std::move(m));
}

// script D^{(J)}_{lambda nu}: N x N, entries 1/(d! Gamma(2N+lambda_j+nu_k-j-k+g1+g2+2)).
GammaProduct det_d_jacobi_script(const Partition& lambda, const Partition& nu, unsigned N,
                                 const Rational& c) {
    std::vector<std::vector<GammaProduct>> m(N, std::vector<GammaProduct>(N));
    for (unsigned j = 1; j <= N; ++j)
        for (unsigned k = 1; k <= N; ++k) {
            long long d = static_cast<long long>(lambda.part(j)) - nu.part(k) - j + k;
            if (d < 0) continue;
            Rational arg = c + 2 * static_cast<long long>(N) + lambda.part(j) + nu.part(k) -
                           static_cast<long long>(j) - static_cast<long long>(k);
            m[j - 1][k - 1] = GammaProduct(Rational(BigInt(1), factorial(static_cast<unsigned>(d)))) /
                              GammaProduct::gamma(arg);
        }
    return det_gamma(std::move(m));
}

// tilde D^{(J)}_{lambda nu}: entries Gamma(2N+lambda_j+nu_k-j-k+g1+g2+1)/d!.
GammaProduct det_d_jacobi_tilde(const Partition& lambda, const Partition& nu, unsigned N,
                                const Rational& c) {
    std::vector<std::vector<GammaProduct>> m(N, std::vector<GammaProduct>(N));
    for (unsigned j = 1; j <= N; ++j)
        for (unsigned k = 1; k <= N; ++k) {
            long long d = static_cast<long long>(lambda.part(j)) - nu.part(k) - j + k;
            if (d < 0) continue;
            Rational arg = c - 1 + 2 * static_cast<long long>(N) + lambda.part(j) + nu.part(k) -
                           static_cast<long long>(j) - static_cast<long long>(k);
            m[j - 1][k - 1] = GammaProduct::gamma(arg) *
                              GammaProduct(Rational(BigInt(1), factorial(static_cast<unsigned>(d))));
        }
    return det_gamma(std::move(m));
}

void check_subpartition(const Partition& lambda, const Partition& nu, const char* what) {
    if (!contains(nu, lambda))
        throw std::invalid_argument(std::string(what) + ": nu is not contained in lambda");
}

// prod over boxes of lambda/nu of (N + j - i); the polynomial C_lambda/C_nu.
PolyN skew_content_poly(const Partition& lambda, const Partition& nu) {
    PolyN p = Rational(1);
    for (unsigned i = 1; i <= lambda.length(); ++i)
        for (unsigned j = nu.part(i) + 1; j <= lambda.part(i); ++j)
            p *= PolyN::from_coeffs({Rational(static_cast<long long>(j) - i), Rational(1)});
    return p;
}

int sign_pm(unsigned long long exponent) { return exponent % 2 == 0 ? 1 : -1; }

// (-1)^{|nu| + N(N-1)/2}
Rational lj_sign(const Partition& nu, unsigned N) {
    unsigned long long e = nu.weight() + static_cast<unsigned long long>(N) * (N - 1) / 2;
    return Rational(sign_pm(e));
}

// G_lambda(N, gamma)/G_nu(N, gamma) as an exact rational, N >= l(lambda).
Rational g_quotient(const Partition& lambda, const Partition& nu, unsigned N, const Rational& gamma) {
    Rational r = 1;
    for (unsigned j = 1; j <= lambda.length(); ++j)
        r *= rising_factorial(gamma + nu.part(j) + static_cast<long long>(N) - j + 1,
                              lambda.part(j) - nu.part(j));
    return r;
}

// G_lambda(N, 0) = prod_{j=1}^N (lambda_j + N - j)!
BigInt g_integer(const Partition& lambda, unsigned N) {
    BigInt r = 1;
    for (unsigned j = 1; j <= N; ++j) r *= factorial(lambda.part(j) + N - j);
    return r;
}

GammaProduct g_gamma(const Partition& lambda, unsigned N, const Rational& gamma) {
    GammaProduct r{Rational(1)};
    for (unsigned j = 1; j <= N; ++j)
        r *= GammaProduct::gamma(gamma + lambda.part(j) + static_cast<long long>(N) - j + 1);
    return r;
}

}  // namespace

Rational det_D(const EnsembleSpec& family, const Partition& lambda, const Partition& nu,
               std::optional<unsigned> N) {
    check_subpartition(lambda, nu, "det_D");
    switch (family.kind) {
        case EnsembleSpec::Kind::hermite:
            if ((lambda.weight() - nu.weight()) % 2 != 0)
                throw std::invalid_argument("det_D: |lambda|-|nu| must be even for hermite");
            return det_d_hermite(lambda, nu);
        case EnsembleSpec::Kind::laguerre:
            return det_d_laguerre(lambda, nu);
        case EnsembleSpec::Kind::jacobi: {
            if (!N) throw std::invalid_argument("det_D: jacobi requires N");
            if (*N < lambda.length()) throw std::invalid_argument("det_D: N < l(lambda)");
            const Rational c = family.gamma1 + family.gamma2 + 2;
            GammaProduct pref{Rational(1)};
            for (unsigned i = 1; i <= *N; ++i)
                pref *= GammaProduct::gamma(c + 2 * static_cast<long long>(*N) - 2 * static_cast<long long>(i));
            return (pref * det_d_jacobi_script(lambda, nu, *N, c)).to_rational();
        }
    }
    throw std::logic_error("det_D: unreachable");
}

PolyN psi_coeff_symbolic(const Partition& lambda, const Partition& nu) {
    check_subpartition(lambda, nu, "psi_coeff");
    if ((lambda.weight() - nu.weight()) % 2 != 0) return PolyN();
    unsigned half = (lambda.weight() - nu.weight()) / 2;
    return skew_content_poly(lambda, nu) *
           (det_d_hermite(lambda, nu) / pow_rational(Rational(2), half));
}

PolyN kappa_coeff_symbolic(const Partition& lambda, const Partition& nu) {
    check_subpartition(lambda, nu, "kappa_coeff");
    if ((lambda.weight() - nu.weight()) % 2 != 0) return PolyN();
    unsigned half = (lambda.weight() - nu.weight()) / 2;
    return skew_content_poly(lambda, nu) *
           (det_d_hermite(lambda, nu) * pow_rational(Rational(-2), -static_cast<long long>(half)));
}

Rational psi_coeff(const EnsembleSpec& family, const Partition& lambda, const Partition& nu, unsigned N) {
    check_subpartition(lambda, nu, "psi_coeff");
    if (N < lambda.length()) throw std::invalid_argument("psi_coeff: N < l(lambda)");
    switch (family.kind) {
        case EnsembleSpec::Kind::hermite:
            return psi_coeff_symbolic(lambda, nu).eval(Rational(N));
        case EnsembleSpec::Kind::laguerre:
            return lj_sign(nu, N) * g_quotient(lambda, nu, N, family.gamma) *
                   Rational(g_integer(lambda, N)) * det_d_laguerre(lambda, nu);
        case EnsembleSpec::Kind::jacobi: {
            const Rational c = family.gamma1 + family.gamma2 + 2;
            Rational norm = 1;
            for (unsigned j = 1; j <= N; ++j)
                norm *= c - 1 + 2 * (static_cast<long long>(nu.part(j)) + static_cast<long long>(N) - j);
            GammaProduct value = GammaProduct(lj_sign(nu, N) *
                                              g_quotient(lambda, nu, N, family.gamma1) *
                                              Rational(g_integer(lambda, N)) * norm) *
                                 g_gamma(nu, N, family.gamma1 + family.gamma2) *
                                 det_d_jacobi_script(lambda, nu, N, c);
            return value.to_rational();
        }
    }
    throw std::logic_error("psi_coeff: unreachable");
}

Rational kappa_coeff(const EnsembleSpec& family, const Partition& lambda, const Partition& nu, unsigned N) {
    check_subpartition(lambda, nu, "kappa_coeff");
    if (N < lambda.length()) throw std::invalid_argument("kappa_coeff: N < l(lambda)");
    switch (family.kind) {
        case EnsembleSpec::Kind::hermite:
            return kappa_coeff_symbolic(lambda, nu).eval(Rational(N));
        case EnsembleSpec::Kind::laguerre:
            return lj_sign(nu, N) * g_quotient(lambda, nu, N, family.gamma) *
                   det_d_laguerre(lambda, nu) / Rational(g_integer(nu, N));
        case EnsembleSpec::Kind::jacobi: {
            const Rational c = family.gamma1 + family.gamma2 + 2;
            GammaProduct value = GammaProduct(lj_sign(nu, N) *
                                              g_quotient(lambda, nu, N, family.gamma1) /
                                              Rational(g_integer(nu, N))) *
                                 det_d_jacobi_tilde(lambda, nu, N, c) /
                                 g_gamma(lambda, N, family.gamma1 + family.gamma2);
            return value.to_rational();
        }
    }
    throw std::logic_error("kappa_coeff: unreachable");
}

std::vector<Partition> partitions_in_rectangle(unsigned p, unsigned q) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned row, unsigned cap) -> void {
        out.emplace_back(Partition(cur));
        if (row == p) return;
        for (unsigned k = cap; k >= 1; --k) {
            cur.push_back(k);
            self(self, row + 1, k);
            cur.pop_back();
        }
    };
    rec(rec, 0, q);
    return out;
}

std::pair<Rational, Rational> verify_dual_cauchy(const EnsembleSpec& family, const PointList& t,
                                                 const PointList& x) {
    const unsigned p = static_cast<unsigned>(t.size());
    const unsigned q = static_cast<unsigned>(x.size());
    if (p == 0 || q == 0 || p > 4 || q > 4)
        throw std::invalid_argument("verify_dual_cauchy: need 1 <= p, q <= 4");
    check_distinct(t, "verify_dual_cauchy t");
    check_distinct(x, "verify_dual_cauchy x");

    Rational lhs = 1;
    for (const Rational& ti : t)
        for (const Rational& xj : x) lhs *= ti - xj;

    Rational pref = 1;
    switch (family.kind) {
        case EnsembleSpec::Kind::hermite:
            break;
        case EnsembleSpec::Kind::laguerre:
            for (unsigned m = 0; m < p + q; ++m)
                pref *= Rational(sign_pm(m)) * Rational(factorial(m));
            break;
        case EnsembleSpec::Kind::jacobi:
            for (unsigned m = 0; m < p + q; ++m)
                pref *= Rational(sign_pm(m)) * Rational(factorial(m)) /
                        rising_factorial(family.gamma1 + family.gamma2 + m + 1, m);
            break;
    }

    Rational sum = 0;
    for (const Partition& lambda : partitions_in_rectangle(p, q)) {
        Partition tilde = rect_complement(lambda, p, q);
        Rational term = mop_eval(family, lambda, t) * mop_eval(family, tilde, x);
        sum += Rational(sign_pm(tilde.weight())) * term;
    }
    return {lhs, pref * sum};
}

bool verify_genfun_truncated(unsigned vars, unsigned max_degree) {
    if (vars == 0 || vars > 3 || max_degree > 8)
        throw std::invalid_argument("verify_genfun_truncated: need 1 <= vars <= 3, degree <= 8");

    // prod_j sum_m (-1)^m t_j^{2m} / (2^m m!), truncated
    MvPoly lhs(vars, Rational(1));
    for (unsigned j = 0; j < vars; ++j) {
        MvPoly series(vars);
        for (unsigned m = 0; 2 * m <= max_degree; ++m) {
            std::vector<unsigned> e(vars, 0);
            e[j] = 2 * m;
            Rational coef = Rational(sign_pm(m)) / (pow_rational(Rational(2), m) * Rational(factorial(m)));
            series += MvPoly::monomial(std::move(e), coef);
        }
        lhs *= series;
    }
    lhs = lhs.truncated(max_degree);

    MvPoly rhs(vars);
    for (unsigned n = 0; 2 * n <= max_degree; ++n) {
        for (const Partition& nu : partitions_of(2 * n)) {
            if (nu.length() > vars) continue;
            Rational d = det_D(EnsembleSpec::hermite(), nu, Partition());
            if (d == 0) continue;
            Rational coef = Rational(sign_pm(n)) / pow_rational(Rational(2), n) * d;
            rhs += schur_mvpoly(nu, vars) * coef;
        }
    }
    return lhs == rhs.truncated(max_degree);
}

}  // namespace rmtsf
