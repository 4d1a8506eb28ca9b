#include "rmtsf/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "rmtsf/characters.hpp"
#include "rmtsf/fluctuations.hpp"
#include "rmtsf/io.hpp"
#include "rmtsf/moments.hpp"
#include "rmtsf/montecarlo.hpp"
#include "rmtsf/wick.hpp"

namespace rmtsf {

namespace {

PolyN NN() { return PolyN::variable(); }
PolyN lin(long long shift) { return PolyN::from_coeffs({Rational(shift), Rational(1)}); }  // N + shift

struct Collector {
    CriterionResult r;
    explicit Collector(int id, std::string name) { r.id = id; r.name = std::move(name); }

    template <typename T>
    void expect_eq(const std::string& label, const T& lhs, const T& rhs, const std::string& lhs_s,
                   const std::string& rhs_s) {
        ++r.checks;
        if (!(lhs == rhs)) r.failures.push_back(label + ": " + lhs_s + " != " + rhs_s);
    }

    void expect(const std::string& label, bool ok, const std::string& detail = "") {
        ++r.checks;
        if (!ok) r.failures.push_back(label + (detail.empty() ? "" : ": " + detail));
    }

    CriterionResult done() {
        r.passed = r.failures.empty();
        return r;
    }
};

void expect_poly(Collector& c, const std::string& label, const PolyN& got, const PolyN& want) {
    c.expect_eq(label, got, want, poly_to_text(got), poly_to_text(want));
}

void expect_laurent(Collector& c, const std::string& label, const LaurentPolyN& got,
                    const LaurentPolyN& want) {
    c.expect_eq(label, got, want, laurent_to_text(got), laurent_to_text(want));
}

PolyN hermite_trace(const Partition& mu) {
    return trace_joint_moment(EnsembleSpec::hermite(), mu).poly;
}

}  // namespace

CriterionResult check_trace_table_partitions6() {
    Collector c(1, "partitions-of-6 GUE joint trace table");
    const PolyN N = NN(), N2 = N * N;
    auto P = [](std::initializer_list<unsigned> parts) { return Partition(std::vector<unsigned>(parts)); };
    expect_poly(c, "E[p6]", hermite_trace(P({6})), Rational(5) * N2 * (N2 + 2));
    expect_poly(c, "E[p5 p1]", hermite_trace(P({5, 1})), Rational(5) * N * (Rational(2) * N2 + 1));
    expect_poly(c, "E[p4 p2]", hermite_trace(P({4, 2})), N * (Rational(2) * N2 + 1) * (N2 + 4));
    expect_poly(c, "E[p4 p1^2]", hermite_trace(P({4, 1, 1})), N2 * (Rational(2) * N2 + 13));
    expect_poly(c, "E[p3^2]", hermite_trace(P({3, 3})), Rational(3) * N * (Rational(4) * N2 + 1));
    expect_poly(c, "E[p3 p2 p1]", hermite_trace(P({3, 2, 1})), Rational(3) * N2 * (N2 + 4));
    expect_poly(c, "E[p3 p1^3]", hermite_trace(P({3, 1, 1, 1})), Rational(3) * N * (Rational(3) * N2 + 2));
    expect_poly(c, "E[p2^3]", hermite_trace(P({2, 2, 2})), N2 * (N2 + 2) * (N2 + 4));
    expect_poly(c, "E[p2^2 p1^2]", hermite_trace(P({2, 2, 1, 1})), N * (N2 + 2) * (N2 + 4));
    expect_poly(c, "E[p2 p1^4]", hermite_trace(P({2, 1, 1, 1, 1})), Rational(3) * N2 * (N2 + 4));
    expect_poly(c, "E[p1^6]", hermite_trace(P({1, 1, 1, 1, 1, 1})), Rational(15) * N * N2);
    return c.done();
}

CriterionResult check_schur_table_partitions4() {
    Collector c(2, "partitions-of-4 GUE Schur moment table");
    auto S = [](std::vector<unsigned> parts) {
        return schur_moment(EnsembleSpec::hermite(), Partition(std::move(parts))).poly;
    };
    const Rational eighth(1, 8), quarter(1, 4);
    expect_poly(c, "E[S_4]", S({4}), eighth * NN() * lin(1) * lin(2) * lin(3));
    expect_poly(c, "E[S_31]", S({3, 1}), -eighth * lin(-1) * NN() * lin(1) * lin(2));
    expect_poly(c, "E[S_22]", S({2, 2}), quarter * lin(-1) * NN() * NN() * lin(1));
    expect_poly(c, "E[S_211]", S({2, 1, 1}), -eighth * lin(-2) * lin(-1) * NN() * lin(1));
    expect_poly(c, "E[S_1111]", S({1, 1, 1, 1}), eighth * lin(-3) * lin(-2) * lin(-1) * NN());
    return c.done();
}

CriterionResult check_x_table_partitions6() {
    Collector c(3, "partitions-of-6 Chebyshev linear-statistic table");
    auto X = [](std::vector<unsigned> ks) { return xk_joint_central_moment(ks); };
    auto L = [](const Rational& coeff, int exp) { return LaurentPolyN::term(coeff, exp); };
    expect_laurent(c, "E[X6]", X({6}), LaurentPolyN());
    expect_laurent(c, "E[X5 X1]", X({5, 1}), L({5, 4}, -2));
    expect_laurent(c, "E[X4 X2]", X({4, 2}), L(1, -2));
    expect_laurent(c, "E[X4 X1^2]", X({4, 1, 1}), L({1, 2}, -1));
    expect_laurent(c, "E[X3^2]", X({3, 3}), L({3, 4}, 0) + L({3, 4}, -2));
    expect_laurent(c, "E[X3 X2 X1]", X({3, 2, 1}), L({3, 4}, -1));
    expect_laurent(c, "E[X3 X1^3]", X({3, 1, 1, 1}), L({3, 8}, -2));
    expect_laurent(c, "E[X2^3]", X({2, 2, 2}), L(1, -1));
    expect_laurent(c, "E[X2^2 X1^2]", X({2, 2, 1, 1}), L({1, 8}, 0) + L({1, 2}, -2));
    expect_laurent(c, "E[X2 X1^4]", X({2, 1, 1, 1, 1}), L({3, 8}, -1));
    expect_laurent(c, "E[X1^6]", X({1, 1, 1, 1, 1, 1}), L({15, 64}, 0));
    return c.done();
}

CriterionResult check_first_power_moments() {
    Collector c(4, "E[(Tr M_R)^{2n}] = (2n)!/(2^{3n} n!), N-independent");
    for (unsigned n = 1; n <= 5; ++n) {
        LaurentPolyN via_pipeline = rescaled_trace_moment(Partition(std::vector<unsigned>(2 * n, 1)));
        LaurentPolyN expected(tr_m1_power_closed_form(n));
        expect_laurent(c, "2n=" + std::to_string(2 * n), via_pipeline, expected);
    }
    return c.done();
}

CriterionResult check_tr_m2_closed_form() {
    Collector c(5, "E[(Tr M_R^2)^n] closed form vs character pipeline");
    for (unsigned n = 1; n <= 6; ++n) {
        LaurentPolyN closed = tr_m2_power_closed_form(n, n);
        LaurentPolyN pipeline = rescaled_trace_moment(Partition(std::vector<unsigned>(n, 2)));
        expect_laurent(c, "n=" + std::to_string(n), pipeline, closed);
    }
    return c.done();
}

CriterionResult check_x2_cumulants() {
    Collector c(6, "cumulants of X_2: kappa_n = (n-1)!/(2 N^{n-2})");
    for (unsigned n = 2; n <= 6; ++n) {
        LaurentPolyN got = xk_cumulant(2, n);
        LaurentPolyN want = LaurentPolyN::term(Rational(factorial(n - 1)) / 2,
                                               -(static_cast<int>(n) - 2));
        expect_laurent(c, "n=" + std::to_string(n), got, want);
    }
    return c.done();
}

CriterionResult check_hypergeom_identity() {
    Collector c(7, "E[Tr M^{2j}] = N (2j-1)!! 2F1(-j,1-N;2;2)");
    for (unsigned j = 1; j <= 6; ++j) {
        PolyN via_2f1 = gue_even_trace_hypergeom_poly(j);
        PolyN via_characters = hermite_trace(Partition({2 * j}));
        expect_poly(c, "j=" + std::to_string(j), via_characters, via_2f1);
    }
    return c.done();
}

CriterionResult check_dual_cauchy(std::uint64_t seed) {
    Collector c(8, "generalized dual Cauchy identity");
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    auto random_points = [&](unsigned count) {
        PointList pts;
        while (pts.size() < count) {
            Rational q(num(gen), den(gen));
            bool dup = false;
            for (const Rational& p : pts) dup |= (p == q);
            if (!dup) pts.push_back(q);
        }
        return pts;
    };
    const std::vector<EnsembleSpec> families = {
        EnsembleSpec::hermite(), EnsembleSpec::laguerre(Rational(1, 2)),
        EnsembleSpec::jacobi(Rational(1, 3), Rational(1, 4))};
    for (const EnsembleSpec& family : families)
        for (unsigned p = 1; p <= 3; ++p)
            for (unsigned q = 1; q <= 3; ++q)
                for (unsigned rep = 0; rep < 20; ++rep) {
                    PointList t = random_points(p);
                    PointList x = random_points(q);
                    auto [lhs, rhs] = verify_dual_cauchy(family, t, x);
                    std::string label = family.name() + " p=" + std::to_string(p) +
                                        " q=" + std::to_string(q) + " rep=" + std::to_string(rep);
                    c.expect_eq(label, lhs, rhs, to_string(lhs), to_string(rhs));
                }
    return c.done();
}

CriterionResult check_wick_equivalence() {
    Collector c(9, "Wick pairing oracle vs the character-sum formula");
    auto compare = [&](const Partition& mu) {
        LaurentPolyN oracle = wick_trace_moment(mu, WickConvention::unrescaled);
        LaurentPolyN formula = hermite_trace(mu).to_laurent();
        expect_laurent(c, "mu=(" + mu.to_string() + ")", oracle, formula);
    };
    for (unsigned w : {2u, 4u, 6u, 8u})
        for (const Partition& mu : partitions_of(w)) compare(mu);
    compare(Partition({10}));
    compare(Partition({6, 4}));
    return c.done();
}

CriterionResult check_odd_pair_identity() {
    Collector c(10, "E[p_{2k-1} p_1] = (2k-1) E[p_{2k-2}]");
    for (unsigned k = 1; k <= 5; ++k) {
        PolyN lhs = hermite_trace(Partition({2 * k - 1, 1}));
        PolyN rhs = k == 1 ? NN() : hermite_trace(Partition({2 * k - 2}));
        rhs *= Rational(2 * k - 1);
        expect_poly(c, "k=" + std::to_string(k), lhs, rhs);
    }
    return c.done();
}

CriterionResult check_character_invariants() {
    Collector c(11, "character table orthogonality and symmetries, n <= 8");
    for (unsigned n = 1; n <= 8; ++n) {
        const CharacterTable& table = character_table(n);
        const size_t count = table.labels.size();
        std::vector<Rational> zinv(count);
        for (size_t m = 0; m < count; ++m) zinv[m] = Rational(1) / Rational(z_centralizer(table.labels[m]));
        bool row_ok = true, col_ok = true, conj_ok = true;
        for (size_t a = 0; a < count; ++a)
            for (size_t b = 0; b < count; ++b) {
                Rational row_sum = 0;
                BigInt col_sum = 0;
                for (size_t m = 0; m < count; ++m) {
                    row_sum += zinv[m] * Rational(BigInt(table.chi[a][m]) * BigInt(table.chi[b][m]));
                    col_sum += BigInt(table.chi[m][a]) * BigInt(table.chi[m][b]);
                }
                row_ok &= (row_sum == (a == b ? Rational(1) : Rational(0)));
                col_ok &= (col_sum == (a == b ? z_centralizer(table.labels[a]) : BigInt(0)));
            }
        for (size_t l = 0; l < count; ++l) {
            Partition conj = conjugate(table.labels[l]);
            for (size_t m = 0; m < count; ++m) {
                int sign = (n - table.labels[m].length()) % 2 == 0 ? 1 : -1;
                conj_ok &= (table.entry(conj, table.labels[m]) == sign * table.chi[l][m]);
            }
        }
        BigInt dim2 = 0;
        for (const Partition& lambda : table.labels) {
            BigInt d = dim_irrep(lambda);
            dim2 += d * d;
        }
        c.expect("row orthogonality n=" + std::to_string(n), row_ok);
        c.expect("column orthogonality n=" + std::to_string(n), col_ok);
        c.expect("conjugation sign rule n=" + std::to_string(n), conj_ok);
        c.expect("sum dim^2 = n! at n=" + std::to_string(n), dim2 == factorial(n));
    }
    return c.done();
}

CriterionResult check_genfun_identity() {
    Collector c(12, "truncated generating-function identity");
    for (unsigned vars = 1; vars <= 2; ++vars)
        for (unsigned degree = 2; degree <= 6; ++degree)
            c.expect("vars=" + std::to_string(vars) + " degree=" + std::to_string(degree),
                     verify_genfun_truncated(vars, degree));
    return c.done();
}

CriterionResult check_psi_kappa_inverse() {
    Collector c(13, "psi and kappa are inverse triangular systems, |lambda| <= 6, N=5");
    const unsigned N = 5;
    const std::vector<EnsembleSpec> families = {
        EnsembleSpec::hermite(), EnsembleSpec::laguerre(Rational(1, 2)),
        EnsembleSpec::jacobi(Rational(1, 3), Rational(1, 4))};
    for (const EnsembleSpec& family : families) {
        for (unsigned w = 0; w <= 6; ++w)
            for (const Partition& lambda : partitions_of(w)) {
                if (lambda.length() > N) continue;  // S_lambda = 0 in N variables
                // collect all nu inside lambda
                std::vector<Partition> subs;
                for (unsigned wv = 0; wv <= w; ++wv)
                    for (const Partition& nu : partitions_of(wv))
                        if (contains(nu, lambda)) subs.push_back(nu);
                bool ok = true;
                for (const Partition& nu : subs) {
                    Rational sum = 0;
                    for (const Partition& rho : subs) {
                        if (!contains(nu, rho) || !contains(rho, lambda)) continue;
                        sum += psi_coeff(family, lambda, rho, N) * kappa_coeff(family, rho, nu, N);
                    }
                    ok &= (sum == (nu == lambda ? Rational(1) : Rational(0)));
                }
                c.expect(family.name() + " lambda=(" + lambda.to_string() + ")", ok);
            }
    }
    return c.done();
}

CriterionResult check_gaussian_limit_structure() {
    Collector c(14, "Gaussian-limit structure of E[X_k^n]");
    for (unsigned k = 1; k <= 8; k += 2)
        for (unsigned n = 2; n * k <= 12; n += 2) {
            LaurentPolyN m = xk_joint_central_moment(std::vector<unsigned>(n, k));
            Rational constant = pow_rational(Rational(k), n / 2) *
                                Rational(factorial(n)) /
                                (pow_rational(Rational(2), n + n / 2) * Rational(factorial(n / 2)));
            std::string base = "k=" + std::to_string(k) + " n=" + std::to_string(n);
            c.expect(base + " 1/N coefficient vanishes", m.coeff(-1) == 0,
                     to_string(m.coeff(-1)));
            c.expect(base + " constant term", m.coeff(0) == constant,
                     to_string(m.coeff(0)) + " vs " + to_string(constant));
        }
    for (unsigned k = 2; k <= 8; k += 2)
        for (unsigned n = 1; n * k <= 12; n += 2) {
            LaurentPolyN m = xk_joint_central_moment(std::vector<unsigned>(n, k));
            std::string base = "k=" + std::to_string(k) + " n=" + std::to_string(n);
            c.expect(base + " constant term vanishes", m.coeff(0) == 0, to_string(m.coeff(0)));
        }
    return c.done();
}

CriterionResult check_monte_carlo(std::uint64_t seed, unsigned workers) {
    Collector c(15, "Monte Carlo agreement within 5 standard errors");
    const std::uint64_t samples = 100000;
    auto z_ok = [&](const std::string& label, const Estimate& est, const Rational& exact) {
        double target = static_cast<double>(exact);
        double z = est.standard_error > 0 ? (est.mean - target) / est.standard_error
                                          : (est.mean == target ? 0.0 : 1e9);
        std::ostringstream os;
        os << "estimate " << est.mean << " target " << target << " z " << z;
        c.expect(label, std::abs(z) <= 5.0, os.str());
    };

    SamplerConfig gue{EnsembleSpec::hermite(), 8, samples, seed, workers};
    for (unsigned p : {2u, 4u, 6u}) {
        Partition mu({p});
        z_ok("GUE E[p" + std::to_string(p) + "] N=8",
             estimate_trace_moment(gue, mu),
             trace_joint_moment(EnsembleSpec::hermite(), mu, 8).value);
    }
    z_ok("GUE charpoly p=1 t=0 N=8", estimate_charpoly_product(gue, {0.0}),
         charpoly_moment(EnsembleSpec::hermite(), 8, {Rational(0)}));
    z_ok("GUE charpoly p=2 t=(0,1) N=8", estimate_charpoly_product(gue, {0.0, 1.0}),
         charpoly_moment(EnsembleSpec::hermite(), 8, {Rational(0), Rational(1)}));

    SamplerConfig lue{EnsembleSpec::laguerre(Rational(1)), 8, samples, seed + 1, workers};
    for (unsigned p : {1u, 2u}) {
        Partition mu({p});
        z_ok("LUE(gamma=1) E[p" + std::to_string(p) + "] N=8",
             estimate_trace_moment(lue, mu),
             trace_joint_moment(EnsembleSpec::laguerre(Rational(1)), mu, 8).value);
    }

    SamplerConfig jue{EnsembleSpec::jacobi(Rational(0), Rational(0)), 2, samples, seed + 2, workers};
    z_ok("JUE(0,0) E[p1] N=2", estimate_trace_moment(jue, Partition({1})),
         trace_joint_moment(EnsembleSpec::jacobi(Rational(0), Rational(0)), Partition({1}), 2).value);
    return c.done();
}

std::vector<CriterionResult> run_exact_suite(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    out.push_back(check_trace_table_partitions6());
    out.push_back(check_schur_table_partitions4());
    out.push_back(check_x_table_partitions6());
    out.push_back(check_first_power_moments());
    out.push_back(check_tr_m2_closed_form());
    out.push_back(check_x2_cumulants());
    out.push_back(check_hypergeom_identity());
    out.push_back(check_dual_cauchy(seed));
    out.push_back(check_wick_equivalence());
    out.push_back(check_odd_pair_identity());
    out.push_back(check_character_invariants());
    out.push_back(check_genfun_identity());
    out.push_back(check_psi_kappa_inverse());
    out.push_back(check_gaussian_limit_structure());
    return out;
}

std::vector<CriterionResult> run_acceptance(bool include_mc, std::uint64_t seed, unsigned workers) {
    std::vector<CriterionResult> out = run_exact_suite(seed);
    if (include_mc) out.push_back(check_monte_carlo(seed, workers));
    return out;
}

}  // namespace rmtsf
