#include "rmtsf/moments.hpp"

#include <functional>

#include "rmtsf/characters.hpp"
#include "rmtsf/gamma_product.hpp"

namespace rmtsf {

namespace {

constexpr unsigned kMaxMomentWeight = 24;

Partition two_to_the(unsigned m) { return Partition(std::vector<unsigned>(m, 2)); }

void check_weight(const Partition& mu, const char* what) {
    if (mu.weight() > kMaxMomentWeight)
        throw std::invalid_argument(std::string(what) + ": |mu| exceeds " +
                                    std::to_string(kMaxMomentWeight));
}

PolyN hermite_trace_poly(const Partition& mu) {
    const unsigned w = mu.weight();
    if (w % 2 != 0) return PolyN();
    const unsigned m = w / 2;
    const Partition cls = two_to_the(m);
    PolyN sum;
    for (const Partition& lambda : partitions_of(w)) {
        long long chi2 = character(lambda, cls);
        if (chi2 == 0) continue;
        long long chimu = character(lambda, mu);
        if (chimu == 0) continue;
        sum += c_lambda(lambda) * Rational(BigInt(chi2) * BigInt(chimu));
    }
    return sum * (Rational(1) / (pow_rational(Rational(2), m) * Rational(factorial(m))));
}

PolyN laguerre_trace_poly(const Partition& mu, const Rational& gamma) {
    const unsigned w = mu.weight();
    PolyN sum;
    for (const Partition& lambda : partitions_of(w)) {
        long long chimu = character(lambda, mu);
        if (chimu == 0) continue;
        sum += g_ratio(lambda, gamma) * c_lambda(lambda) *
               (Rational(dim_irrep(lambda)) * Rational(chimu));
    }
    return sum * Rational(BigInt(1), factorial(w));
}

Rational jacobi_trace_value(const Partition& mu, const EnsembleSpec& ensemble, unsigned N) {
    const unsigned w = mu.weight();
    Rational sum = 0;
    for (const Partition& lambda : partitions_of(w)) {
        if (lambda.length() > N) continue;  // C_lambda(N) vanishes
        long long chimu = character(lambda, mu);
        if (chimu == 0) continue;
        sum += g_ratio(lambda, ensemble.gamma1).eval(Rational(N)) *
               c_lambda(lambda).eval(Rational(N)) * Rational(chimu) *
               det_D(ensemble, lambda, Partition(), N);
    }
    return sum;
}

}  // namespace

MomentResult trace_joint_moment(const EnsembleSpec& ensemble, const Partition& mu,
                                std::optional<unsigned> fixed_n) {
    check_weight(mu, "trace_joint_moment");
    MomentResult r{ensemble, mu, !fixed_n.has_value(), PolyN(), Rational(0)};
    switch (ensemble.kind) {
        case EnsembleSpec::Kind::hermite: {
            PolyN p = hermite_trace_poly(mu);
            if (fixed_n) r.value = p.eval(Rational(*fixed_n));
            else r.poly = std::move(p);
            return r;
        }
        case EnsembleSpec::Kind::laguerre: {
            PolyN p = laguerre_trace_poly(mu, ensemble.gamma);
            if (fixed_n) r.value = p.eval(Rational(*fixed_n));
            else r.poly = std::move(p);
            return r;
        }
        case EnsembleSpec::Kind::jacobi:
            if (!fixed_n)
                throw std::invalid_argument("trace_joint_moment: jacobi supports fixed-N mode only");
            r.value = jacobi_trace_value(mu, ensemble, *fixed_n);
            return r;
    }
    throw std::logic_error("trace_joint_moment: unreachable");
}

MomentResult schur_moment(const EnsembleSpec& ensemble, const Partition& lambda,
                          std::optional<unsigned> fixed_n) {
    check_weight(lambda, "schur_moment");
    MomentResult r{ensemble, lambda, !fixed_n.has_value(), PolyN(), Rational(0)};
    const unsigned w = lambda.weight();
    switch (ensemble.kind) {
        case EnsembleSpec::Kind::hermite: {
            PolyN p;
            if (w % 2 == 0) {
                long long chi = character(lambda, two_to_the(w / 2));
                p = c_lambda(lambda) *
                    (Rational(chi) / (pow_rational(Rational(2), w / 2) * Rational(factorial(w / 2))));
            }
            if (fixed_n) r.value = p.eval(Rational(*fixed_n));
            else r.poly = std::move(p);
            return r;
        }
        case EnsembleSpec::Kind::laguerre: {
            PolyN p = c_lambda(lambda) * g_ratio(lambda, ensemble.gamma) *
                      Rational(dim_irrep(lambda), factorial(w));
            if (fixed_n) r.value = p.eval(Rational(*fixed_n));
            else r.poly = std::move(p);
            return r;
        }
        case EnsembleSpec::Kind::jacobi: {
            if (!fixed_n)
                throw std::invalid_argument("schur_moment: jacobi supports fixed-N mode only");
            if (lambda.length() > *fixed_n) {
                r.value = 0;
            } else {
                r.value = g_ratio(lambda, ensemble.gamma1).eval(Rational(*fixed_n)) *
                          c_lambda(lambda).eval(Rational(*fixed_n)) *
                          det_D(ensemble, lambda, Partition(), *fixed_n);
            }
            return r;
        }
    }
    throw std::logic_error("schur_moment: unreachable");
}

Rational charpoly_moment(const EnsembleSpec& ensemble, unsigned N, const PointList& t) {
    const unsigned p = static_cast<unsigned>(t.size());
    if (p == 0 || p > 5) throw std::invalid_argument("charpoly_moment: need 1 <= p <= 5");
    Partition np(std::vector<unsigned>(p, N));
    Rational pref = 1;
    switch (ensemble.kind) {
        case EnsembleSpec::Kind::hermite:
            break;
        case EnsembleSpec::Kind::laguerre:
            for (unsigned j = N; j < p + N; ++j)
                pref *= Rational(j % 2 == 0 ? 1 : -1) * Rational(factorial(j));
            break;
        case EnsembleSpec::Kind::jacobi:
            for (unsigned j = N; j < p + N; ++j)
                pref *= Rational(j % 2 == 0 ? 1 : -1) * Rational(factorial(j)) /
                        rising_factorial(ensemble.gamma1 + ensemble.gamma2 + j + 1, j);
            break;
    }
    return pref * mop_eval(ensemble, np, t);
}

namespace {

// nu inside the p x q rectangle together with its weight, by recursion.
void for_each_subrectangle(unsigned p, unsigned q, const std::function<void(const Partition&)>& f) {
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned row, unsigned cap) -> void {
        f(Partition(cur));
        if (row == p) return;
        for (unsigned k = cap; k >= 1; --k) {
            cur.push_back(k);
            self(self, row + 1, k);
            cur.pop_back();
        }
    };
    rec(rec, 0, q);
}

}  // namespace

std::vector<Rational> charpoly_power_moment(const EnsembleSpec& ensemble, unsigned N, unsigned p) {
    if (p == 0 || p * N > 30)
        throw std::invalid_argument("charpoly_power_moment: need p >= 1 and p*N <= 30");
    const Partition lambda(std::vector<unsigned>(p, N));
    const Rational c_lambda_p = c_lambda(lambda).eval(Rational(p));
    std::vector<Rational> coeffs(p * N + 1, Rational(0));

    const int outer_sign = (static_cast<unsigned long long>(p) * (p + N - 1)) % 2 == 0 ? 1 : -1;
    GammaProduct jacobi_pref{Rational(1)};
    if (ensemble.is(EnsembleSpec::Kind::jacobi)) {
        for (unsigned j = N; j < p + N; ++j)
            jacobi_pref /= GammaProduct::gamma(ensemble.gamma1 + ensemble.gamma2 + 2 * static_cast<long long>(j) + 1);
    }

    for_each_subrectangle(p, N, [&](const Partition& nu) {
        const unsigned w = nu.weight();
        const Rational dim_term = Rational(dim_irrep(nu), factorial(w));
        switch (ensemble.kind) {
            case EnsembleSpec::Kind::hermite: {
                if ((lambda.weight() - w) % 2 != 0) return;
                unsigned half = (lambda.weight() - w) / 2;
                Rational d = det_D(ensemble, lambda, nu);
                if (d == 0) return;
                coeffs[w] += c_lambda_p * pow_rational(Rational(-2), -static_cast<long long>(half)) *
                             dim_term * d;
                return;
            }
            case EnsembleSpec::Kind::laguerre: {
                Rational d = det_D(ensemble, lambda, nu);
                if (d == 0) return;
                Rational gq = 1;  // G_lambda(p,gamma)/G_nu(p,gamma)
                for (unsigned j = 1; j <= p; ++j)
                    gq *= rising_factorial(ensemble.gamma + nu.part(j) + static_cast<long long>(p) - j + 1,
                                           N - nu.part(j));
                int sign = outer_sign * (w % 2 == 0 ? 1 : -1);
                coeffs[w] += Rational(sign) * gq * c_lambda_p * dim_term * d;
                return;
            }
            case EnsembleSpec::Kind::jacobi: {
                const Rational c = ensemble.gamma1 + ensemble.gamma2 + 2;
                Rational gq = 1;
                for (unsigned j = 1; j <= p; ++j)
                    gq *= rising_factorial(ensemble.gamma1 + nu.part(j) + static_cast<long long>(p) - j + 1,
                                           N - nu.part(j));
                GammaProduct tilde = [&] {
                    std::vector<std::vector<GammaProduct>> m(p, std::vector<GammaProduct>(p));
                    for (unsigned j = 1; j <= p; ++j)
                        for (unsigned k = 1; k <= p; ++k) {
                            long long dd = static_cast<long long>(N) - nu.part(k) -
                                           static_cast<long long>(j) + k;
                            if (dd < 0) continue;
                            Rational arg = c - 1 + 2 * static_cast<long long>(p) + N + nu.part(k) -
                                           static_cast<long long>(j) - static_cast<long long>(k);
                            m[j - 1][k - 1] =
                                GammaProduct::gamma(arg) *
                                GammaProduct(Rational(BigInt(1), factorial(static_cast<unsigned>(dd))));
                        }
                    return det_gamma(std::move(m));
                }();
                if (tilde.is_zero()) return;
                int sign = outer_sign * (w % 2 == 0 ? 1 : -1);
                GammaProduct term = jacobi_pref * tilde *
                                    GammaProduct(Rational(sign) * gq * c_lambda_p * dim_term);
                coeffs[w] += term.to_rational();
                return;
            }
        }
    });
    return coeffs;
}

PolyN gue_even_trace_hypergeom_poly(unsigned j) {
    if (j == 0 || j > 12) throw std::invalid_argument("gue_even_trace_hypergeom: need 1 <= j <= 12");
    PolyN f;  // 2F1(-j, 1-N; 2; 2) as a terminating sum
    for (unsigned i = 0; i <= j; ++i) {
        Rational c = rising_factorial(Rational(-static_cast<long long>(j)), i) *
                     pow_rational(Rational(2), i) /
                     (rising_factorial(Rational(2), i) * Rational(factorial(i)));
        PolyN pochhammer = Rational(1);  // (1-N)_i
        for (unsigned r = 0; r < i; ++r)
            pochhammer *= PolyN::from_coeffs({Rational(1 + static_cast<long long>(r)), Rational(-1)});
        f += pochhammer * c;
    }
    return PolyN::variable() * f * Rational(double_factorial(2 * static_cast<long long>(j) - 1));
}

Rational gue_even_trace_hypergeom(unsigned j, unsigned N) {
    return gue_even_trace_hypergeom_poly(j).eval(Rational(N));
}

bool gue_odd_pair_identity(unsigned k, unsigned N) {
    if (k == 0 || k > 6) throw std::invalid_argument("gue_odd_pair_identity: need 1 <= k <= 6");
    Partition mu(std::vector<unsigned>{2 * k - 1, 1});
    Rational lhs = trace_joint_moment(EnsembleSpec::hermite(), mu, N).value;
    // Tr M^0 is the trace of the identity, so the k = 1 right side carries N
    Rational even = k == 1
                        ? Rational(N)
                        : trace_joint_moment(EnsembleSpec::hermite(),
                                             Partition(std::vector<unsigned>{2 * k - 2}), N)
                              .value;
    return lhs == Rational(2 * k - 1) * even;
}

}  // namespace rmtsf
