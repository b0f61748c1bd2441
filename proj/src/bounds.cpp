#include "sixterm/bounds.hpp"

#include <stdexcept>
#include <string>

#include "sixterm/quadratic_surd.hpp"

namespace sixterm {

namespace {

void require_positive_x(std::int64_t X) {
    if (X < 1) throw std::invalid_argument("size parameter X must be >= 1, got " + std::to_string(X));
}

template <std::size_t N>
std::array<unsigned, N> caps_for(const std::array<BoundSpec, N>& specs, std::int64_t X) {
    std::array<unsigned, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = cap_for(specs[i], X);
    return out;
}

}  // namespace

mpz_class bound_value(const BoundSpec& spec, std::int64_t X) {
    require_positive_x(X);
    if (spec.c < 1) throw std::invalid_argument("bound multiplier must be >= 1");
    mpz_class x = static_cast<long>(X);
    mpz_class xp;
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), spec.p);
    return mpz_class(static_cast<long>(spec.c)) * xp;
}

unsigned cap_for(const BoundSpec& spec, std::int64_t X) {
    return max_power_leq(psi(), bound_value(spec, X));
}

std::int64_t a_cap(std::int64_t X) {
    require_positive_x(X);
    return kACapFactor * X;
}

std::array<unsigned, 6> sporadic_bounds(std::int64_t X) { return caps_for(kSporadicSpecs, X); }

ParametricCaps parametric_bounds(std::int64_t X) {
    return {caps_for(kForm1Specs, X), caps_for(kForm2Specs, X)};
}

BoundSet compute_bounds(std::int64_t X) {
    BoundSet b;
    b.X = X;
    b.a_cap = a_cap(X);
    b.sporadic = sporadic_bounds(X);
    const ParametricCaps pc = parametric_bounds(X);
    b.form1 = pc.form1;
    b.form2 = pc.form2;
    return b;
}

}  // namespace sixterm
