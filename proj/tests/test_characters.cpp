#include <doctest.h>

#include "rmtsf/characters.hpp"

using namespace rmtsf;

namespace {
Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("character values") {
    for (unsigned n = 1; n <= 7; ++n)
        for (const Partition& mu : partitions_of(n)) CHECK(character(P({n}), mu) == 1);
    CHECK(character(P({1, 1, 1}), P({2, 1})) == -1);
    CHECK(character(P({2, 2}), P({2, 2})) == 2);
    CHECK(character(P({2, 1}), P({3})) == -1);
    CHECK(character(P({1, 1}), P({2})) == -1);
    CHECK_THROWS_AS(character(P({2}), P({3})), std::invalid_argument);
}

TEST_CASE("dim_irrep") {
    CHECK(dim_irrep(P({5})) == 1);
    CHECK(dim_irrep(P({2, 1})) == 2);
    CHECK(dim_irrep(P({2, 2})) == 2);
    CHECK(dim_irrep(P({3, 1})) == 3);
    CHECK(dim_irrep(Partition()) == 1);
}

TEST_CASE("character table small cases") {
    const CharacterTable& t2 = character_table(2);
    // classes in canonical order: (2), (1,1)
    CHECK(t2.entry(P({2}), P({2})) == 1);
    CHECK(t2.entry(P({2}), P({1, 1})) == 1);
    CHECK(t2.entry(P({1, 1}), P({2})) == -1);
    CHECK(t2.entry(P({1, 1}), P({1, 1})) == 1);

    const CharacterTable& t1 = character_table(1);
    CHECK(t1.labels.size() == 1);
    CHECK(t1.chi[0][0] == 1);

    const CharacterTable& t4 = character_table(4);
    REQUIRE(t4.labels.size() == 5);
    std::vector<long long> dims;
    for (size_t i = 0; i < 5; ++i) dims.push_back(t4.entry(t4.labels[i], P({1, 1, 1, 1})));
    CHECK(dims == std::vector<long long>{1, 3, 2, 3, 1});
}

TEST_CASE("column orthogonality, n <= 8") {
    for (unsigned n = 1; n <= 8; ++n) {
        const CharacterTable& t = character_table(n);
        const size_t count = t.labels.size();
        for (size_t a = 0; a < count; ++a)
            for (size_t b = a; b < count; ++b) {
                BigInt sum = 0;
                for (size_t l = 0; l < count; ++l) sum += BigInt(t.chi[l][a]) * BigInt(t.chi[l][b]);
                CHECK(sum == (a == b ? z_centralizer(t.labels[a]) : BigInt(0)));
            }
    }
}

TEST_CASE("conjugation sign rule, n <= 8") {
    for (unsigned n = 1; n <= 8; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (const Partition& mu : partitions_of(n)) {
                int sign = (n - mu.length()) % 2 == 0 ? 1 : -1;
                CHECK(character(conjugate(lambda), mu) == sign * character(lambda, mu));
            }
}

TEST_CASE("character weight bound is configurable") {
    unsigned saved = character_weight_bound();
    set_character_weight_bound(4);
    CHECK_THROWS_AS(character(Partition({5}), Partition({5})), std::invalid_argument);
    CHECK_THROWS_AS(character_table(5), std::invalid_argument);
    set_character_weight_bound(saved);
    CHECK(character(Partition({5}), Partition({5})) == 1);
}

TEST_CASE("dimension consistency, n <= 10") {
    for (unsigned n = 1; n <= 10; ++n) {
        BigInt sum = 0;
        std::vector<unsigned> ones(n, 1);
        for (const Partition& lambda : partitions_of(n)) {
            BigInt d = dim_irrep(lambda);
            CHECK(d == character(lambda, Partition(ones)));
            sum += d * d;
        }
        CHECK(sum == factorial(n));
    }
}
