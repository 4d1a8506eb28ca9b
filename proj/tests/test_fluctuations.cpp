#include <doctest.h>

#include "rmtsf/fluctuations.hpp"
#include "rmtsf/wick.hpp"

using namespace rmtsf;

namespace {

Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }
LaurentPolyN L(const Rational& c, int e) { return LaurentPolyN::term(c, e); }

}  // namespace

TEST_CASE("rescaled trace moments") {
    CHECK(rescaled_trace_moment(P({2})) == L(Rational(1, 4), 1));
    CHECK(rescaled_trace_moment(P({2, 2})) == L(Rational(1, 16), 2) + L(Rational(1, 8), 0));
    CHECK(rescaled_trace_moment(P({1, 1})) == L(Rational(1, 4), 0));
    CHECK(rescaled_trace_moment(P({3})).is_zero());
    CHECK(rescaled_trace_moment(Partition()) == LaurentPolyN(Rational(1)));
}

TEST_CASE("chebyshev coefficients") {
    ChebyshevCoeffs t2 = chebyshev_coeffs(2);
    CHECK(t2.coeffs == std::map<unsigned, Rational>{{0, -1}, {2, 2}});
    ChebyshevCoeffs t3 = chebyshev_coeffs(3);
    CHECK(t3.coeffs == std::map<unsigned, Rational>{{1, -3}, {3, 4}});
    ChebyshevCoeffs t0 = chebyshev_coeffs(0);
    CHECK(t0.coeffs == std::map<unsigned, Rational>{{0, 1}});

    for (unsigned k = 1; k <= 16; ++k) {
        ChebyshevCoeffs tk = chebyshev_coeffs(k);
        Rational at_one = 0;
        for (const auto& [d, c] : tk.coeffs) {
            at_one += c;
            CHECK(d % 2 == k % 2);  // parity respected
        }
        CHECK(at_one == Rational(1));  // T_k(1) = 1
        CHECK(tk.coeffs.rbegin()->second == pow_rational(Rational(2), static_cast<long long>(k) - 1));
    }
    CHECK_THROWS_AS(chebyshev_coeffs(17), std::invalid_argument);
}

TEST_CASE("X_k joint central moments against the partitions-of-6 table") {
    CHECK(xk_joint_central_moment({3, 3}) == L(Rational(3, 4), 0) + L(Rational(3, 4), -2));
    CHECK(xk_joint_central_moment({2, 2, 2}) == L(Rational(1), -1));
    CHECK(xk_joint_central_moment({6}).is_zero());
    CHECK(xk_joint_central_moment({1, 1, 1, 1, 1, 1}) == L(Rational(15, 64), 0));
    CHECK(xk_joint_central_moment_at({3, 3}, 2) == Rational(3, 4) + Rational(3, 16));
    CHECK_THROWS_AS(xk_joint_central_moment({9}), std::invalid_argument);
}

TEST_CASE("Szego limit constants for k <= 4, even n <= 6") {
    // constant term of E[X_k^n] is the Gaussian moment (sqrt(k)/2)^n (n-1)!!
    for (unsigned k = 1; k <= 4; ++k)
        for (unsigned n = 2; n <= 6; n += 2) {
            Rational expected = pow_rational(Rational(k, 4), n / 2) *
                                Rational(double_factorial(static_cast<long long>(n) - 1));
            CHECK(xk_joint_central_moment(std::vector<unsigned>(n, k)).coeff(0) == expected);
        }
}

TEST_CASE("limiting Gaussian covariance structure") {
    // Var X_k -> k/4 and Cov(X_i, X_j) -> 0; subleading terms are O(1/N)
    for (unsigned k = 1; k <= 8; ++k)
        CHECK(xk_joint_central_moment({k, k}).coeff(0) == Rational(k, 4));
    for (unsigned i = 1; i <= 4; ++i)
        for (unsigned j = 1; j < i; ++j) {
            LaurentPolyN cov = xk_joint_central_moment({i, j});
            CHECK(cov.coeff(0) == 0);
            if (!cov.is_zero()) CHECK(cov.max_exp() < 0);
        }
}

TEST_CASE("odd k, odd n vanish identically") {
    for (auto [k, n] : {std::pair<unsigned, unsigned>{1, 3}, {3, 1}, {1, 5}, {3, 3}, {5, 1}})
        CHECK(xk_joint_central_moment(std::vector<unsigned>(n, k)).is_zero());
}

TEST_CASE("first trace power even moments are N-independent") {
    CHECK(tr_m1_power_closed_form(1) == Rational(1, 4));
    CHECK(tr_m1_power_closed_form(2) == Rational(3, 16));
    CHECK(tr_m1_power_closed_form(3) == Rational(15, 64));
    for (unsigned n = 1; n <= 4; ++n)
        CHECK(xk_joint_central_moment(std::vector<unsigned>(2 * n, 1)) ==
              LaurentPolyN(tr_m1_power_closed_form(n)));
}

TEST_CASE("connected correlators") {
    CHECK(connected_correlator(P({2})).value == L(Rational(1, 4), 1));
    CHECK(connected_correlator(P({2, 2})).value == L(Rational(1, 8), 0));
    CHECK(connected_correlator(P({4})).value == L(Rational(1, 8), 1) + L(Rational(1, 16), -1));
    CHECK(connected_correlator(P({3})).value.is_zero());
    // disconnected pieces subtract: E_c[2,2,2]
    LaurentPolyN m3 = rescaled_trace_moment(P({2, 2, 2}));
    LaurentPolyN m2 = rescaled_trace_moment(P({2, 2}));
    LaurentPolyN m1 = rescaled_trace_moment(P({2}));
    LaurentPolyN expected = m3 - Rational(3) * m1 * m2 + Rational(2) * m1 * m1 * m1;
    CHECK(connected_correlator(P({2, 2, 2})).value == expected);
}

TEST_CASE("connected correlators match the Wick oracle") {
    for (unsigned w : {2u, 4u, 6u, 8u})
        for (const Partition& mu : partitions_of(w))
            CHECK(connected_correlator(mu).value == wick_connected(mu));
}

TEST_CASE("genus coefficients") {
    CHECK(genus_coefficient(P({2}), 0) == Rational(1));
    CHECK(genus_coefficient(P({2, 2}), 0) == Rational(2));
    CHECK(genus_coefficient(P({4}), 0) == Rational(2));
    CHECK(genus_coefficient(P({4}), 1) == Rational(1));
    CHECK(genus_coefficient(P({4}), 7) == Rational(0));  // absent exponent

    for (unsigned w : {2u, 4u, 6u, 8u})
        for (const Partition& mu : partitions_of(w))
            for (unsigned g = 0; 4 * g <= mu.weight(); ++g) {
                Rational a = genus_coefficient(mu, g);
                CHECK(a >= 0);
                CHECK(is_integer(a));
            }
}

TEST_CASE("cumulants of X_2") {
    CHECK(xk_cumulant(2, 2) == LaurentPolyN(Rational(1, 2)));
    CHECK(xk_cumulant(2, 4) == L(Rational(3), -2));
    for (unsigned n = 2; n <= 6; ++n)
        CHECK(xk_cumulant(2, n) ==
              L(Rational(factorial(n - 1)) / 2, -(static_cast<int>(n) - 2)));
}

TEST_CASE("moment-cumulant consistency for X_k") {
    // kappa_n = m_n - sum_{j=1}^{n-1} C(n-1,j-1) kappa_j m_{n-j}, kappa_1 = 0
    for (unsigned k = 1; k <= 3; ++k) {
        std::vector<LaurentPolyN> m(7), kappa(7);
        m[0] = LaurentPolyN(Rational(1));
        unsigned max_n = std::min(6u, 20u / k);
        for (unsigned n = 1; n <= max_n; ++n)
            m[n] = xk_joint_central_moment(std::vector<unsigned>(n, k));
        for (unsigned n = 1; n <= max_n; ++n) {
            LaurentPolyN value = m[n];
            for (unsigned j = 1; j < n; ++j)
                value -= Rational(binomial(n - 1, j - 1)) * kappa[j] * m[n - j];
            kappa[n] = value;
            if (n >= 2) CHECK(xk_cumulant(k, n) == kappa[n]);
        }
    }
}

TEST_CASE("cumulant leading order N^{2-n}") {
    for (unsigned k = 1; k <= 3; ++k)
        for (unsigned n = 3; n * k <= 12; ++n) {
            LaurentPolyN kappa = xk_cumulant(k, n);
            if (kappa.is_zero()) continue;  // odd k with odd n
            CHECK(kappa.max_exp() <= 2 - static_cast<int>(n));
        }
}

TEST_CASE("(Tr M^2)^n closed forms") {
    CHECK(tr_m2_power_closed_form(1, 1) == L(Rational(1, 4), 1));
    CHECK(tr_m2_power_closed_form(2, 2) == rescaled_trace_moment(P({2, 2})));
    CHECK(tr_m2_power_closed_form(3, 3) == rescaled_trace_moment(P({2, 2, 2})));
    // mixed closed form E[(Tr M^2)^k (Tr M)^{2(n-k)}]
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            std::vector<unsigned> parts(k, 2);
            parts.insert(parts.end(), 2 * (n - k), 1);
            CHECK(tr_m2_power_closed_form(n, k) == rescaled_trace_moment(Partition(parts)));
        }
    CHECK_THROWS_AS(tr_m2_power_closed_form(11, 0), std::invalid_argument);
}

TEST_CASE("genus constraint on Laurent exponents") {
    for (unsigned w : {2u, 4u, 6u})
        for (const Partition& mu : partitions_of(w)) {
            LaurentPolyN c = connected_correlator(mu).value;
            if (c.is_zero()) continue;
            int l = static_cast<int>(mu.length());
            CHECK(c.max_exp() <= 2 - l);
            for (const auto& [e, coeff] : c.coeffs())
                CHECK((2 - l - e) % 2 == 0);  // exponent 2 - 2g - l for integer g
        }
}
