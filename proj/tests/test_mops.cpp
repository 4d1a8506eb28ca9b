#include <doctest.h>

#include <random>

#include "rmtsf/characters.hpp"
#include "rmtsf/mops.hpp"

using namespace rmtsf;

namespace {

Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

PointList distinct_points(std::mt19937_64& gen, unsigned count) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    PointList pts;
    while (pts.size() < count) {
        Rational q(num(gen), den(gen));
        bool dup = false;
        for (const Rational& p : pts) dup |= (p == q);
        if (!dup) pts.push_back(q);
    }
    return pts;
}

const EnsembleSpec kFamilies[] = {EnsembleSpec::hermite(),
                                  EnsembleSpec::laguerre(Rational(1, 2)),
                                  EnsembleSpec::jacobi(Rational(1, 3), Rational(1, 4))};

}  // namespace

TEST_CASE("univariate polynomials") {
    const UnivariateOP& h2 = univariate_coeffs(EnsembleSpec::hermite(), 2);
    CHECK(h2.coeffs == std::vector<Rational>{-1, 0, 1});
    const UnivariateOP& h0 = univariate_coeffs(EnsembleSpec::hermite(), 0);
    CHECK(h0.coeffs == std::vector<Rational>{1});

    Rational g(1, 2);
    const UnivariateOP& l1 = univariate_coeffs(EnsembleSpec::laguerre(g), 1);
    CHECK(l1.coeffs == std::vector<Rational>{g + 1, -1});

    // monic three-term recurrence for probabilists' Hermite
    for (unsigned n = 1; n <= 10; ++n) {
        const auto& hn = univariate_coeffs(EnsembleSpec::hermite(), n).coeffs;
        const auto& hm = univariate_coeffs(EnsembleSpec::hermite(), n - 1).coeffs;
        const auto& hp = univariate_coeffs(EnsembleSpec::hermite(), n + 1).coeffs;
        for (size_t j = 0; j < hp.size(); ++j) {
            Rational xh = j >= 1 && j - 1 < hn.size() ? hn[j - 1] : Rational(0);
            Rational lower = j < hm.size() ? hm[j] : Rational(0);
            CHECK(hp[j] == xh - Rational(n) * lower);
        }
    }

    // Laguerre leading coefficient (-1)^n / n!
    for (unsigned n = 0; n <= 6; ++n) {
        const auto& ln = univariate_coeffs(EnsembleSpec::laguerre(g), n).coeffs;
        CHECK(ln.back() == Rational(n % 2 == 0 ? 1 : -1) / Rational(factorial(n)));
    }

    // Jacobi degree 1 against the explicit sum
    Rational g1(1, 3), g2(1, 4);
    const UnivariateOP& j1 = univariate_coeffs(EnsembleSpec::jacobi(g1, g2), 1);
    CHECK(j1.coeffs == std::vector<Rational>{g1 + 1, -(g1 + g2 + 2)});
}

TEST_CASE("ensemble parameter validation") {
    CHECK_THROWS_AS(EnsembleSpec::laguerre(Rational(-2)), std::invalid_argument);
    CHECK_THROWS_AS(EnsembleSpec::jacobi(Rational(-1), Rational(0)), std::invalid_argument);
}

TEST_CASE("mop_eval") {
    CHECK(mop_eval(EnsembleSpec::hermite(), Partition(), {Rational(2), Rational(5)}) == Rational(1));
    CHECK(mop_eval(EnsembleSpec::hermite(), P({1}), {Rational(1), Rational(2)}) == Rational(3));
    Rational t(5, 7);
    CHECK(mop_eval(EnsembleSpec::hermite(), P({1}), {t}) == t);

    CHECK_THROWS_AS(mop_eval(EnsembleSpec::hermite(), P({1}), {Rational(1), Rational(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(mop_eval(EnsembleSpec::hermite(), P({1, 1, 1}), {Rational(1), Rational(2)}),
                    std::invalid_argument);
}

TEST_CASE("multivariate hermite parity") {
    std::mt19937_64 gen(3);
    for (const Partition& lam : {P({1}), P({2}), P({2, 1}), P({3, 2})}) {
        PointList x = distinct_points(gen, 3);
        PointList neg = x;
        for (Rational& v : neg) v = -v;
        Rational sign = lam.weight() % 2 == 0 ? 1 : -1;
        CHECK(mop_eval(EnsembleSpec::hermite(), lam, neg) ==
              sign * mop_eval(EnsembleSpec::hermite(), lam, x));
    }
}

TEST_CASE("det_D") {
    CHECK(det_D(EnsembleSpec::hermite(), P({2}), Partition()) == Rational(1));
    for (const Partition& lam : partitions_of(4))
        CHECK(det_D(EnsembleSpec::laguerre(0), lam, Partition()) ==
              Rational(dim_irrep(lam), factorial(4)));
    CHECK(det_D(EnsembleSpec::hermite(), P({3, 1}), P({3, 1})) == Rational(1));
    CHECK_THROWS_AS(det_D(EnsembleSpec::hermite(), P({3}), Partition()), std::invalid_argument);
    CHECK_THROWS_AS(det_D(EnsembleSpec::hermite(), P({1}), P({2})), std::invalid_argument);
    CHECK_THROWS_AS(det_D(EnsembleSpec::jacobi(0, 0), P({2}), Partition()), std::invalid_argument);
}

TEST_CASE("psi and kappa, hermite symbolic") {
    CHECK(psi_coeff_symbolic(P({2}), Partition()) ==
          PolyN::from_coeffs({0, Rational(1, 2), Rational(1, 2)}));
    CHECK(psi_coeff_symbolic(P({2}), P({2})) == PolyN(1));
    CHECK(kappa_coeff_symbolic(P({2}), Partition()) ==
          PolyN::from_coeffs({0, Rational(-1, 2), Rational(-1, 2)}));
    CHECK(kappa_coeff_symbolic(P({1, 1}), Partition()) ==
          PolyN::from_coeffs({0, Rational(-1, 2), Rational(1, 2)}));
    // H_{(2,1)} = S_{(2,1)} exactly: the (2,1)/(1) determinant vanishes
    CHECK(psi_coeff_symbolic(P({2, 1}), P({1})).is_zero());
    CHECK(psi_coeff_symbolic(P({3, 1}), P({1, 1})).is_zero() == false);
    CHECK(psi_coeff_symbolic(P({2}), P({1})).is_zero());  // odd skew weight

    // roots of psi_{(4,1,1),(2)} are the contents of the skew diagram
    PolyN psi = psi_coeff_symbolic(P({4, 1, 1}), P({2}));
    REQUIRE(!psi.is_zero());
    for (int root : {-3, -2, 1, 2}) CHECK(psi.eval(root) == Rational(0));
    CHECK(psi.degree() == 4);
}

TEST_CASE("kappa matches the univariate expansion at N=1") {
    // lowest-order sanity for the open normalization question
    for (const EnsembleSpec& family : kFamilies) {
        for (unsigned n = 0; n <= 4; ++n) {
            const UnivariateOP& op = univariate_coeffs(family, n);
            for (unsigned j = 0; j <= n; ++j)
                CHECK(kappa_coeff(family, P(std::vector<unsigned>(1, n)), P(std::vector<unsigned>(1, j)), 1) ==
                      op.coeffs[j]);
        }
    }
}

TEST_CASE("expansion consistency: S_lambda = sum psi Phi_nu at random points") {
    std::mt19937_64 gen(17);
    const unsigned N = 3;
    for (const EnsembleSpec& family : kFamilies)
        for (unsigned w = 1; w <= 4; ++w)
            for (const Partition& lam : partitions_of(w)) {
                if (lam.length() > N) continue;
                PointList x = distinct_points(gen, N);
                Rational lhs = schur_eval(lam, x);
                Rational rhs = 0;
                for (unsigned wv = 0; wv <= w; ++wv)
                    for (const Partition& nu : partitions_of(wv)) {
                        if (!contains(nu, lam)) continue;
                        Rational c = psi_coeff(family, lam, nu, N);
                        if (c != 0) rhs += c * mop_eval(family, nu, x);
                    }
                CHECK(lhs == rhs);
            }
}

TEST_CASE("orthogonality of multivariate Hermite at N=2 via Gaussian moments") {
    // <H_lambda, H_mu> under Z_2^{-1} Delta^2 exp(-x^2/2): expand everything
    // into monomials and integrate with E[x^{2m}] = (2m-1)!!.
    const unsigned N = 2;
    auto gaussian_moment = [](unsigned m) {
        return m % 2 == 1 ? Rational(0) : Rational(double_factorial(static_cast<long long>(m) - 1));
    };
    auto mv_hermite = [&](const Partition& lam) {
        MvPoly h(N);
        for (unsigned wv = 0; wv <= lam.weight(); ++wv)
            for (const Partition& nu : partitions_of(wv)) {
                if (!contains(nu, lam)) continue;
                Rational c = kappa_coeff(EnsembleSpec::hermite(), lam, nu, N);
                if (c != 0) h += schur_mvpoly(nu, N) * c;
            }
        return h;
    };
    MvPoly delta = MvPoly::variable(N, 0) - MvPoly::variable(N, 1);
    MvPoly weight = delta * delta;
    std::vector<Partition> lams;
    for (unsigned w = 0; w <= 2; ++w)
        for (const Partition& lam : partitions_of(w))
            if (lam.length() <= N) lams.push_back(lam);
    for (const Partition& a : lams)
        for (const Partition& b : lams) {
            MvPoly integrand = mv_hermite(a) * mv_hermite(b) * weight;
            Rational integral = 0;
            for (const auto& [exps, coeff] : integrand.terms())
                integral += coeff * gaussian_moment(exps[0]) * gaussian_moment(exps[1]);
            integral /= Rational(factorial(1) * factorial(2));  // prod j! normalization
            Rational expected = a == b ? c_lambda(a).eval(N) : Rational(0);
            CHECK(integral == expected);
        }
}

TEST_CASE("generalized dual Cauchy identity examples") {
    std::mt19937_64 gen(29);
    auto [l1, r1] = verify_dual_cauchy(EnsembleSpec::hermite(), distinct_points(gen, 1),
                                       distinct_points(gen, 1));
    CHECK(l1 == r1);

    auto [l2, r2] = verify_dual_cauchy(EnsembleSpec::hermite(), {Rational(1), Rational(2)},
                                       {Rational(3), Rational(5)});
    CHECK(l2 == Rational(24));
    CHECK(r2 == Rational(24));

    auto [l3, r3] = verify_dual_cauchy(EnsembleSpec::laguerre(Rational(1, 2)),
                                       distinct_points(gen, 1), distinct_points(gen, 2));
    CHECK(l3 == r3);

    CHECK_THROWS_AS(
        verify_dual_cauchy(EnsembleSpec::hermite(), {Rational(1), Rational(1)}, {Rational(0)}),
        std::invalid_argument);
}

TEST_CASE("truncated generating function identity") {
    CHECK(verify_genfun_truncated(1, 2));
    CHECK(verify_genfun_truncated(1, 0));
    CHECK(verify_genfun_truncated(2, 4));
    CHECK(verify_genfun_truncated(3, 4));
    CHECK_THROWS_AS(verify_genfun_truncated(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_genfun_truncated(1, 9), std::invalid_argument);
}

TEST_CASE("partitions_in_rectangle") {
    CHECK(partitions_in_rectangle(2, 2).size() == 6);  // (), (1), (2), (1,1), (2,1), (2,2)
    CHECK(partitions_in_rectangle(3, 3).size() == 20);
}
