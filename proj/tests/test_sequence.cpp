#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "oracles.hpp"
#include "sixterm/quadratic_surd.hpp"
#include "sixterm/sequence.hpp"

using sixterm::SequenceParams;
using sixterm::SequenceTable;

namespace {

std::vector<mpz_class> as_vec(std::span<const mpz_class> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("build_table examples") {
    CHECK(as_vec(SequenceTable::build({6}, 4).xs()) == std::vector<mpz_class>{0, 1, 6, 35, 204});
    CHECK(as_vec(SequenceTable::build({2}, 5).xs()) == std::vector<mpz_class>{0, 1, 2, 3, 4, 5});
    CHECK(as_vec(SequenceTable::build({5}, 2).xs()) == std::vector<mpz_class>{0, 1, 5});
    CHECK(as_vec(SequenceTable::build({6}, 4).ys()) == std::vector<mpz_class>{2, 6, 34, 198, 1154});
}

TEST_CASE("build_table rejects bad parameters") {
    CHECK_THROWS_AS(SequenceTable::build({1}, 4), std::invalid_argument);
    CHECK_THROWS_AS(SequenceTable::build({6}, 0), std::invalid_argument);
}

TEST_CASE("large tables stay exact") {
    const auto t = SequenceTable::build({308}, 26);
    CHECK(t.x(26).get_str().size() == 63);
    CHECK(t.x(26) == 308 * t.x(25) - t.x(24));
    CHECK(t.x(26) == oracle::terms(308, 26)[26]);
}

TEST_CASE("recurrence, monotonicity and square identity hold") {
    for (std::int64_t A = 3; A <= 20; ++A) {
        const auto t = SequenceTable::build({A}, 50);
        CHECK(t.x(0) == 0);
        CHECK(t.x(1) == 1);
        CHECK(t.y(0) == 2);
        CHECK(t.y(1) == A);
        for (int n = 1; n < 50; ++n) {
            CHECK(t.x(n + 1) == A * t.x(n) - t.x(n - 1));
            CHECK(t.y(n + 1) == A * t.y(n) - t.y(n - 1));
            CHECK(t.x(n + 1) > t.x(n));
        }
        for (int n = 0; n <= 50; ++n) CHECK(sixterm::check_square_identity(t, n));
    }
}

TEST_CASE("index_of examples") {
    const auto t = SequenceTable::build({6}, 10);
    CHECK(t.index_of(35) == 3);
    CHECK_FALSE(t.index_of(36).has_value());
    CHECK(t.index_of(0) == 0);
    CHECK_FALSE(t.index_of(-35).has_value());
    CHECK_FALSE(t.index_of(t.x(10) + 1).has_value());
}

TEST_CASE("index_of inverts the table") {
    for (std::int64_t A = 3; A <= 30; ++A) {
        const auto t = SequenceTable::build({A}, 40);
        for (int n = 1; n <= 40; ++n) {
            CHECK(t.index_of(t.x(n)) == n);
            CHECK_FALSE(t.index_of(t.x(n) + 1).has_value());
        }
    }
}

TEST_CASE("gcd identity examples") {
    CHECK(sixterm::check_gcd_identity(SequenceParams{6}, 4, 6));
    CHECK(sixterm::check_gcd_identity(SequenceParams{3}, 5, 5));
    CHECK(sixterm::check_gcd_identity(SequenceParams{7}, 2, 3));
    CHECK_THROWS_AS(sixterm::check_gcd_identity(SequenceParams{7}, 0, 3), std::invalid_argument);
    // gcd(x_4, x_6) for A = 6: gcd(204, 6930) = 6 = x_2
    const auto x = oracle::terms(6, 6);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x[4].get_mpz_t(), x[6].get_mpz_t());
    CHECK(g == 6);
}

TEST_CASE("gcd identity over a grid") {
    for (std::int64_t A = 3; A <= 8; ++A) {
        const auto t = SequenceTable::build({A}, 40);
        for (int m = 1; m <= 40; ++m)
            for (int n = 1; n <= 40; ++n) CHECK(sixterm::check_gcd_identity(t, m, n));
    }
}

TEST_CASE("Binet consistency: gamma^n - delta^n = x_n sqrt(A^2 - 4)") {
    for (std::int64_t A = 3; A <= 10; ++A) {
        const auto t = SequenceTable::build({A}, 40);
        const auto g = sixterm::gamma_of(A);
        const auto d = g.conjugate();
        for (unsigned n = 0; n <= 40; ++n) {
            const auto diff = sixterm::sub(sixterm::pow(g, n), sixterm::pow(d, n));
            // x_n sqrt(d) = (0 + 2 x_n sqrt(d)) / 2
            CHECK(diff == sixterm::QuadraticSurd(0, 2 * t.x(static_cast<int>(n)), A * A - 4));
        }
    }
}

TEST_CASE("growth bounds examples") {
    // x_4 = 21 for A = 3; psi^2 ~ 6.85 <= 21 but psi^3 ~ 17.94 < 21.
    const auto a3 = sixterm::check_growth_bounds({3}, 4);
    CHECK(a3.lower);
    CHECK_FALSE(a3.upper);
    // x_2 = 6 for A = 6; gamma ~ 5.83 < 6.
    const auto a6 = sixterm::check_growth_bounds({6}, 2);
    CHECK(a6.lower);
    CHECK_FALSE(a6.upper);
    const auto a5 = sixterm::check_growth_bounds({5}, 1);
    CHECK(a5.lower);
    CHECK(a5.upper);
    CHECK(a5.holds());
    CHECK_THROWS_AS(sixterm::check_growth_bounds({2}, 3), std::invalid_argument);
}

TEST_CASE("lower growth bound holds on a grid") {
    for (std::int64_t A = 3; A <= 12; ++A)
        for (int n = 1; n <= 50; ++n) CHECK(sixterm::check_growth_bounds({A}, n).lower);
}
