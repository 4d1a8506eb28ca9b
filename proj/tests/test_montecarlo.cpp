#include <doctest.h>

#include <cmath>

#include "rmtsf/moments.hpp"
#include "rmtsf/montecarlo.hpp"

using namespace rmtsf;

namespace {

Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

double z_score(const Estimate& est, double target) {
    return est.standard_error > 0 ? (est.mean - target) / est.standard_error : 0.0;
}

}  // namespace

TEST_CASE("determinism: same seed and worker count give bitwise-equal estimates") {
    SamplerConfig config{EnsembleSpec::hermite(), 4, 2000, 123, 3};
    Estimate a = estimate_trace_moment(config, P({2}));
    Estimate b = estimate_trace_moment(config, P({2}));
    CHECK(a.mean == b.mean);
    CHECK(a.standard_error == b.standard_error);
}

TEST_CASE("GUE sampling sanity at N=1") {
    SamplerConfig config{EnsembleSpec::hermite(), 1, 20000, 7, 2};
    Estimate var = estimate_trace_moment(config, P({2}));
    CHECK(std::abs(z_score(var, 1.0)) <= 5.0);
}

TEST_CASE("LUE sampling sanity at N=1 gamma=0") {
    SamplerConfig config{EnsembleSpec::laguerre(Rational(0)), 1, 20000, 8, 2};
    Estimate mean = estimate_trace_moment(config, P({1}));
    CHECK(std::abs(z_score(mean, 1.0)) <= 5.0);
}

TEST_CASE("JUE sampling sanity at N=1 gamma1=gamma2=0") {
    SamplerConfig config{EnsembleSpec::jacobi(Rational(0), Rational(0)), 1, 20000, 9, 2};
    Estimate mean = estimate_trace_moment(config, P({1}));
    CHECK(std::abs(z_score(mean, 0.5)) <= 5.0);
}

TEST_CASE("non-integer gamma rejected for sampling") {
    SamplerConfig config{EnsembleSpec::laguerre(Rational(1, 2)), 2, 10, 1, 1};
    CHECK_THROWS_AS(estimate_trace_moment(config, P({1})), std::invalid_argument);
}

TEST_CASE("trace moment estimates against the exact engine") {
    SamplerConfig gue{EnsembleSpec::hermite(), 4, 20000, 11, 2};
    double exact = static_cast<double>(trace_joint_moment(EnsembleSpec::hermite(), P({2}), 4).value);
    CHECK(std::abs(z_score(estimate_trace_moment(gue, P({2})), exact)) <= 5.0);

    SamplerConfig lue{EnsembleSpec::laguerre(Rational(1)), 4, 20000, 12, 2};
    double lue_exact =
        static_cast<double>(trace_joint_moment(EnsembleSpec::laguerre(Rational(1)), P({1}), 4).value);
    CHECK(std::abs(z_score(estimate_trace_moment(lue, P({1})), lue_exact)) <= 5.0);
}

TEST_CASE("characteristic polynomial estimates") {
    SamplerConfig config{EnsembleSpec::hermite(), 2, 20000, 13, 2};
    CHECK(std::abs(z_score(estimate_charpoly_product(config, {0.0}), -1.0)) <= 5.0);

    SamplerConfig one{EnsembleSpec::hermite(), 1, 20000, 14, 2};
    CHECK(std::abs(z_score(estimate_charpoly_product(one, {5.0}), 5.0)) <= 5.0);

    double exact = static_cast<double>(
        charpoly_moment(EnsembleSpec::hermite(), 2, {Rational(0), Rational(1)}));
    CHECK(std::abs(z_score(estimate_charpoly_product(config, {0.0, 1.0}), exact)) <= 5.0);

    SamplerConfig lue{EnsembleSpec::laguerre(Rational(1)), 2, 20000, 16, 2};
    double lue_exact = static_cast<double>(
        charpoly_moment(EnsembleSpec::laguerre(Rational(1)), 2, {Rational(4)}));
    CHECK(std::abs(z_score(estimate_charpoly_product(lue, {4.0}), lue_exact)) <= 5.0);

    SamplerConfig jue{EnsembleSpec::jacobi(Rational(0), Rational(1)), 2, 20000, 17, 2};
    double jue_exact = static_cast<double>(
        charpoly_moment(EnsembleSpec::jacobi(Rational(0), Rational(1)), 2, {Rational(2)}));
    CHECK(std::abs(z_score(estimate_charpoly_product(jue, {2.0}), jue_exact)) <= 5.0);

    CHECK_THROWS_AS(estimate_charpoly_product(config, {1.0, 2.0, 3.0, 4.0}),
                    std::invalid_argument);
}

TEST_CASE("sample_spectrum shapes and ranges") {
    Rng rng(5);
    SamplerConfig gue{EnsembleSpec::hermite(), 6, 1, 0, 1};
    CHECK(sample_spectrum(gue, rng).size() == 6);

    SamplerConfig jue{EnsembleSpec::jacobi(Rational(1), Rational(2)), 4, 1, 0, 1};
    for (int rep = 0; rep < 20; ++rep)
        for (double x : sample_spectrum(jue, rng)) {
            CHECK(x >= 0.0);
            CHECK(x <= 1.0);
        }

    SamplerConfig lue{EnsembleSpec::laguerre(Rational(2)), 3, 1, 0, 1};
    for (double x : sample_spectrum(lue, rng)) CHECK(x >= 0.0);
}

TEST_CASE("agreement across independent seed batches") {
    // E[p_2] for 2x2 GUE is 4; at least 9 of 10 seed batches within 5 SE
    unsigned hits = 0;
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        SamplerConfig config{EnsembleSpec::hermite(), 2, 3000, seed, 1};
        Estimate est = estimate_trace_moment(config, P({2}));
        if (std::abs(z_score(est, 4.0)) <= 5.0) ++hits;
    }
    CHECK(hits >= 9);
}

TEST_CASE("semicircle fraction at N=64") {
    // integrate (2/pi) sqrt(1-x^2) over [-1/2, 1/2] by Simpson's rule
    auto density = [](double x) { return 2.0 / M_PI * std::sqrt(std::max(0.0, 1.0 - x * x)); };
    const int panels = 4000;
    const double a = -0.5, b = 0.5, h = (b - a) / panels;
    double integral = density(a) + density(b);
    for (int i = 1; i < panels; ++i) integral += density(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    integral *= h / 3.0;

    SamplerConfig config{EnsembleSpec::hermite(), 64, 400, 15, 2};
    Estimate frac = estimate_spectral_fraction(config, -0.5, 0.5);
    CHECK(std::abs(z_score(frac, integral)) <= 5.0);
}
