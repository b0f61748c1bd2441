#include <doctest.h>

#include <span>
#include <stdexcept>

#include "sixterm/bounds.hpp"
#include "sixterm/quadratic_surd.hpp"

using sixterm::BoundSpec;

TEST_CASE("a_cap") {
    CHECK(sixterm::a_cap(1) == 308);
    CHECK(sixterm::a_cap(2) == 616);
    CHECK_THROWS_AS(sixterm::a_cap(0), std::invalid_argument);
}

TEST_CASE("sporadic caps for X = 1") {
    using Caps = std::array<unsigned, 6>;
    CHECK(sixterm::sporadic_bounds(1) == Caps{26, 23, 17, 12, 7, 2});
    // psi^26 <= 99660000000 < psi^27
    CHECK(sixterm::le_integer(sixterm::pow(sixterm::psi(), 26), mpz_class("99660000000")));
    CHECK_FALSE(sixterm::le_integer(sixterm::pow(sixterm::psi(), 27), mpz_class("99660000000")));
    CHECK_THROWS_AS(sixterm::sporadic_bounds(0), std::invalid_argument);
}

TEST_CASE("parametric caps for X = 1") {
    const auto pc = sixterm::parametric_bounds(1);
    CHECK(pc.form1 == std::array<unsigned, 4>{19, 15, 10, 5});
    CHECK(pc.form2 == std::array<unsigned, 5>{23, 20, 14, 9, 4});
}

TEST_CASE("frozen caps for larger X") {
    // Computed independently with exact integer comparisons against psi^t.
    CHECK(sixterm::sporadic_bounds(2) == std::array<unsigned, 6>{33, 29, 22, 15, 9, 3});
    CHECK(sixterm::sporadic_bounds(5) == std::array<unsigned, 6>{43, 38, 29, 20, 12, 4});
    CHECK(sixterm::sporadic_bounds(10) == std::array<unsigned, 6>{50, 44, 34, 24, 14, 4});
    CHECK(sixterm::parametric_bounds(10).form1 == std::array<unsigned, 4>{35, 30, 19, 9});
    CHECK(sixterm::parametric_bounds(10).form2 == std::array<unsigned, 5>{45, 39, 29, 19, 9});
}

TEST_CASE("caps bracket c X^p exactly and grow with X") {
    std::vector<BoundSpec> all;
    using Group = std::span<const BoundSpec>;
    for (Group group : {Group(sixterm::kSporadicSpecs), Group(sixterm::kForm1Specs), Group(sixterm::kForm2Specs)})
        all.insert(all.end(), group.begin(), group.end());
    for (const auto& spec : all) {
        unsigned previous = 0;
        for (std::int64_t X = 1; X <= 40; ++X) {
            const unsigned t = sixterm::cap_for(spec, X);
            const mpz_class bound = sixterm::bound_value(spec, X);
            CHECK(sixterm::le_integer(sixterm::pow(sixterm::psi(), t), bound));
            CHECK_FALSE(sixterm::le_integer(sixterm::pow(sixterm::psi(), t + 1), bound));
            CHECK(t >= previous);
            previous = t;
        }
    }
}

TEST_CASE("caps are ordered within each group") {
    for (std::int64_t X : {1, 2, 3, 5, 10, 25}) {
        const auto b = sixterm::compute_bounds(X);
        for (std::size_t i = 1; i < 6; ++i) CHECK(b.sporadic[i] <= b.sporadic[i - 1]);
        for (std::size_t i = 1; i < 4; ++i) CHECK(b.form1[i] <= b.form1[i - 1]);
        for (std::size_t i = 1; i < 5; ++i) CHECK(b.form2[i] <= b.form2[i - 1]);
        CHECK(b.form2[4] <= b.form1[3]);
    }
}
