#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "sixterm/equation.hpp"
#include "sixterm/search.hpp"
#include "sixterm/sequence.hpp"

using sixterm::CoefficientSet;
using sixterm::Coefficients;

TEST_CASE("size_parameter") {
    CHECK(sixterm::size_parameter({{1, 1, 1, 1, 1, 1}}) == 1);
    CHECK(sixterm::size_parameter({{3, -2, 1, 0, 0, 0}}) == 3);
    CHECK(sixterm::size_parameter({{1, 1, -1, 0, -9, 0}}) == 9);
    CHECK_THROWS_AS(sixterm::size_parameter({{0, 1, 1, 1, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(sixterm::size_parameter({{1, 1, 0, 1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("normalize examples") {
    const auto plain = sixterm::normalize({{1, 1, 1, 1, 1, 1}}, false);
    CHECK(plain.a == Coefficients{1, 1, 1, -1, -1, -1});
    CHECK(plain.X == 1);
    CHECK(plain.origin == sixterm::EquationOrigin::two_sided);

    const auto collided = sixterm::normalize({{2, 1, 1, 1, 1, 1}}, true);
    CHECK(collided.a == Coefficients{1, 1, 1, -1, -1, 0});
    CHECK(collided.X == 2);
    CHECK(collided.origin == sixterm::EquationOrigin::collided);

    CHECK_THROWS_AS(sixterm::normalize({{1, 1, 1, 1, 0, 0}}, true), std::invalid_argument);
}

TEST_CASE("direct_equation") {
    const auto eq = sixterm::direct_equation({1, -1, -1, 0, 0, 0});
    CHECK(eq.X == 1);
    CHECK(sixterm::direct_equation({2, -7, 0, 0, 0, 0}).X == 7);
    CHECK(sixterm::direct_equation({1, 0, 0, 0, 0, 0}, 4).X == 4);
    CHECK_THROWS_AS(sixterm::direct_equation({0, 1, 0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("decode_original") {
    const auto collided = sixterm::normalize({{2, 1, 1, 1, 1, 1}}, true);
    CHECK(sixterm::decode_original(collided, {9, 5, 4, 3, 1, 0}) == sixterm::IndexTuple{9, 5, 4, 9, 3, 1});
    CHECK_FALSE(sixterm::decode_original(collided, {9, 5, 4, 3, 1, 1}).has_value());
    const auto plain = sixterm::normalize({{1, 1, 1, 1, 1, 1}}, false);
    CHECK(sixterm::decode_original(plain, {9, 5, 4, 3, 1, 0}) == sixterm::IndexTuple{9, 5, 4, 3, 1, 0});
}

TEST_CASE("strict original form filter") {
    const auto table = sixterm::SequenceTable::build({3}, 10);
    const auto plain = sixterm::normalize({{1, 1, 1, 1, 1, 1}}, false);
    CHECK(sixterm::satisfies_original_form(plain, {5, 4, 3, 2, 1, 0}, table));
    CHECK_FALSE(sixterm::satisfies_original_form(plain, {5, 4, 4, 2, 1, 0}, table));
    CHECK_FALSE(sixterm::satisfies_original_form(plain, {5, 4, 3, 2, 2, 0}, table));
    // C1 x_{n1} = 2 x_3 = 16 differs from C4 x_{n4} = 4 x_2 = 12.
    const auto distinct_lead = sixterm::direct_equation({2, 1, 1, -4, 0, 0});
    CHECK(sixterm::satisfies_original_form(distinct_lead, {3, 2, 1, 2, 1, 0}, table));
    // C1 x_{n1} == C4 x_{n4} is excluded.
    const auto equal_lead = sixterm::direct_equation({3, 1, 1, -3, 0, 0});
    CHECK_FALSE(sixterm::satisfies_original_form(equal_lead, {3, 2, 1, 3, 1, 0}, table));
}

TEST_CASE("normalized form encodes the two-sided equation tuple by tuple") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        CoefficientSet c;
        for (auto& v : c.c) v = coef(rng);
        if (c.c[0] * c.c[1] * c.c[2] == 0) continue;
        const std::int64_t A = 3 + trial % 3;
        const auto x = oracle::terms(A, 8);
        const auto table = sixterm::SequenceTable::build({A}, 8);
        const auto eq = sixterm::normalize(c, false);
        CHECK(eq.X == sixterm::size_parameter(c));
        auto big = [](std::int64_t v) { return mpz_class(static_cast<long>(v)); };
        for (int m1 = 1; m1 <= 8; ++m1)
            for (int m2 = 0; m2 < m1; ++m2)
                for (int m3 = 0; m3 <= m2; m3 += 2)
                    for (int m4 = 0; m4 <= m3; ++m4)
                        for (int m5 = 0; m5 <= m4; m5 += 3)
                            for (int m6 = 0; m6 <= m5; m6 += 2) {
                                const bool two_sided =
                                    big(c.c[0]) * x[m1] + big(c.c[1]) * x[m2] + big(c.c[2]) * x[m3] ==
                                    big(c.c[3]) * x[m4] + big(c.c[4]) * x[m5] + big(c.c[5]) * x[m6];
                                CHECK(sixterm::satisfies(eq.a, {m1, m2, m3, m4, m5, m6}, table) == two_sided);
                            }
    }
}

TEST_CASE("solution-set preservation against a two-sided brute force") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> coef(-3, 3);
    const sixterm::IndexCaps caps{8, 8, 8, 8, 8, 8};
    int instances = 0;
    int with_solutions = 0;
    while (instances < 40) {
        CoefficientSet c;
        for (auto& v : c.c) v = coef(rng);
        if (c.c[0] * c.c[1] * c.c[2] == 0) continue;
        // Bias towards instances that have solutions: C = (1, 1, 1, ...) style shapes.
        if (instances % 4 == 0) c.c = {1, static_cast<std::int64_t>(coef(rng) | 1), 1, 1, 1, 1};
        const std::int64_t A = 3 + instances % 3;
        ++instances;

        const auto brute = oracle::two_sided_brute_force(A, c.c, 8);
        sixterm::SearchOptions opts;
        opts.strict = true;
        opts.caps = caps;

        // n1 > n2 > n3 >= n4 > n5 > n6: the ranked encoding of the plain form.
        std::set<std::array<int, 6>> expected_plain;
        // n1 == n4 > n2 > n3 >= n5 > n6: the collided encoding.
        std::set<std::array<int, 6>> expected_collided;
        for (const auto& n : brute) {
            if (n[2] >= n[3] && n[0] > n[3]) expected_plain.insert(n);
            if (n[0] == n[3] && n[2] >= n[4]) expected_collided.insert(n);
        }

        const auto plain = sixterm::normalize(c, false);
        std::set<std::array<int, 6>> got_plain;
        for (const auto& r : sixterm::search_all(plain, sixterm::ARange{A, A}, opts))
            got_plain.insert(*sixterm::decode_original(plain, r.indices));
        CHECK(got_plain == expected_plain);

        if (c.c[0] != c.c[3]) {
            const auto collided = sixterm::normalize(c, true);
            std::set<std::array<int, 6>> got_collided;
            for (const auto& r : sixterm::search_all(collided, sixterm::ARange{A, A}, opts))
                got_collided.insert(*sixterm::decode_original(collided, r.indices));
            CHECK(got_collided == expected_collided);
        }
        if (!expected_plain.empty() || !expected_collided.empty()) ++with_solutions;
    }
    CHECK(with_solutions > 0);
}
