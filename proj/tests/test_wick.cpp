#include <doctest.h>

#include "rmtsf/fluctuations.hpp"
#include "rmtsf/moments.hpp"
#include "rmtsf/wick.hpp"

using namespace rmtsf;

namespace {
Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }
LaurentPolyN L(const Rational& c, int e) { return LaurentPolyN::term(c, e); }
}  // namespace

TEST_CASE("wick trace moments, unrescaled") {
    CHECK(wick_trace_moment(P({2}), WickConvention::unrescaled) == L(1, 2));
    CHECK(wick_trace_moment(P({4}), WickConvention::unrescaled) == L(2, 3) + L(1, 1));
    CHECK(wick_trace_moment(P({6}), WickConvention::unrescaled) == L(5, 4) + L(10, 2));
    CHECK(wick_trace_moment(P({3}), WickConvention::unrescaled).is_zero());
    CHECK_THROWS_AS(wick_trace_moment(P({14}), WickConvention::unrescaled),
                    std::invalid_argument);
}

TEST_CASE("wick rescaled convention") {
    CHECK(wick_trace_moment(P({2}), WickConvention::rescaled) == L(Rational(1, 4), 1));
    CHECK(wick_trace_moment(P({1, 1}), WickConvention::rescaled) == L(Rational(1, 4), 0));
}

TEST_CASE("wick connected") {
    CHECK(wick_connected(P({2, 2})) == L(Rational(1, 8), 0));
    CHECK(wick_connected(P({2})) == L(Rational(1, 4), 1));
    CHECK(wick_connected(P({1, 1})) == L(Rational(1, 4), 0));
}

TEST_CASE("oracle equals the character-sum formula, |mu| <= 8 plus spot checks") {
    for (unsigned w : {2u, 4u, 6u, 8u})
        for (const Partition& mu : partitions_of(w))
            CHECK(wick_trace_moment(mu, WickConvention::unrescaled) ==
                  trace_joint_moment(EnsembleSpec::hermite(), mu).poly.to_laurent());
    for (const Partition& mu : {P({10}), P({6, 4}), P({12}), P({8, 4})})
        CHECK(wick_trace_moment(mu, WickConvention::unrescaled) ==
              trace_joint_moment(EnsembleSpec::hermite(), mu).poly.to_laurent());
}

TEST_CASE("connected plus products over set partitions recovers the full moment") {
    // l = 2: m(ab) = c(ab) + c(a)c(b)
    auto m = [](const Partition& mu) {
        return wick_trace_moment(mu, WickConvention::rescaled);
    };
    auto c = [](const Partition& mu) { return wick_connected(mu); };
    for (auto [a, b] : {std::pair<unsigned, unsigned>{2, 2}, {4, 2}, {3, 3}, {6, 2}}) {
        Partition both = a >= b ? P({a, b}) : P({b, a});
        CHECK(m(both) == c(both) + c(P({a})) * c(P({b})));
    }
    // l = 3, mu = (2,2,2): sum over the 5 set partitions of 3 elements
    LaurentPolyN c1 = c(P({2})), c2 = c(P({2, 2})), c3 = c(P({2, 2, 2}));
    CHECK(m(P({2, 2, 2})) == c3 + Rational(3) * c2 * c1 + c1 * c1 * c1);
}

TEST_CASE("wick matches the fluctuation pipeline's connected correlators") {
    for (const Partition& mu : {P({4, 2}), P({2, 2, 2}), P({6}), P({3, 3})})
        CHECK(wick_connected(mu) == connected_correlator(mu).value);
}
