#pragma once

// Finiteness caps for the six-term equation. Every cap is
// max{t : psi^t <= c * X^p}, evaluated exactly in Q(sqrt 5).

#include <array>
#include <cstdint>

#include <gmpxx.h>

namespace sixterm {

struct BoundSpec {
    std::int64_t c = 1;  // multiplier
    unsigned p = 0;      // power of X
};

// Constants in the order m1..m6, (l, k, j, i) and (m, l, k, j, i).
inline constexpr std::array<BoundSpec, 6> kSporadicSpecs{{
    {99'660'000'000, 10},
    {4'530'000'000, 9},
    {17'700'000, 7},
    {123'000, 5},
    {1'000, 3},
    {12, 1},
}};

inline constexpr std::array<BoundSpec, 4> kForm1Specs{{
    {104'000'000, 7},
    {4'720'000, 6},
    {18'500, 4},
    {130, 2},
}};

inline constexpr std::array<BoundSpec, 5> kForm2Specs{{
    {8'305'000'000, 9},
    {377'500'000, 8},
    {1'485'000, 6},
    {10'300, 4},
    {80, 2},
}};

inline constexpr std::int64_t kACapFactor = 308;

/// c * X^p as an exact integer.
mpz_class bound_value(const BoundSpec& spec, std::int64_t X);

/// max{t : psi^t <= c * X^p}. Throws std::invalid_argument for X < 1.
unsigned cap_for(const BoundSpec& spec, std::int64_t X);

/// 308 X: the search visits A in [3, a_cap(X)]. Throws for X < 1.
std::int64_t a_cap(std::int64_t X);

/// Caps for (m1, ..., m6).
std::array<unsigned, 6> sporadic_bounds(std::int64_t X);

struct ParametricCaps {
    std::array<unsigned, 4> form1;  // l, k, j, i
    std::array<unsigned, 5> form2;  // m, l, k, j, i
};
ParametricCaps parametric_bounds(std::int64_t X);

struct BoundSet {
    std::int64_t X = 1;
    std::int64_t a_cap = kACapFactor;
    std::array<unsigned, 6> sporadic{};
    std::array<unsigned, 4> form1{};
    std::array<unsigned, 5> form2{};
};

BoundSet compute_bounds(std::int64_t X);

}  // namespace sixterm
