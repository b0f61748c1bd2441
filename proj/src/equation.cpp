#include "sixterm/equation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include <gmpxx.h>

#include "sixterm/sequence.hpp"

namespace sixterm {

namespace {

void require_standing_hypothesis(const CoefficientSet& c) {
    if (c.c[0] == 0 || c.c[1] == 0 || c.c[2] == 0)
        throw std::invalid_argument("coefficients must satisfy C1*C2*C3 != 0");
}

std::int64_t max_abs(const Coefficients& a) {
    std::int64_t m = 0;
    for (const auto v : a) m = std::max(m, std::abs(v));
    return m;
}

mpz_class big(std::int64_t v) { return static_cast<long>(v); }

}  // namespace

std::int64_t size_parameter(const CoefficientSet& c) {
    require_standing_hypothesis(c);
    return max_abs(c.c);
}

NormalizedEquation normalize(const CoefficientSet& c, bool collide) {
    const std::int64_t X = size_parameter(c);
    const auto& C = c.c;
    if (collide) {
        if (C[0] == C[3])
            throw std::invalid_argument("collided equation needs C1 != C4 (leading term vanishes)");
        return {{C[0] - C[3], C[1], C[2], -C[4], -C[5], 0}, X, EquationOrigin::collided};
    }
    return {{C[0], C[1], C[2], -C[3], -C[4], -C[5]}, X, EquationOrigin::two_sided};
}

NormalizedEquation direct_equation(const Coefficients& a, std::optional<std::int64_t> X) {
    if (a[0] == 0) throw std::invalid_argument("leading coefficient A1 must be nonzero");
    const std::int64_t size = X.value_or(max_abs(a));
    if (size < 1) throw std::invalid_argument("size parameter X must be >= 1");
    return {a, size, EquationOrigin::direct};
}

bool satisfies(const Coefficients& a, const IndexTuple& m, const SequenceTable& table) {
    mpz_class sum = 0;
    for (std::size_t i = 0; i < 6; ++i) sum += big(a[i]) * table.x(m[i]);
    return sum == 0;
}

std::optional<IndexTuple> decode_original(const NormalizedEquation& eq, const IndexTuple& m) {
    if (eq.origin != EquationOrigin::collided) return m;
    if (m[5] != 0) return std::nullopt;
    return IndexTuple{m[0], m[1], m[2], m[0], m[3], m[4]};
}

bool satisfies_original_form(const NormalizedEquation& eq, const IndexTuple& m, const SequenceTable& table) {
    const auto n = decode_original(eq, m);
    if (!n) return false;
    const auto& v = *n;
    if (!(v[0] > v[1] && v[1] > v[2] && v[2] >= 0)) return false;
    if (!(v[3] > v[4] && v[4] > v[5] && v[5] >= 0)) return false;
    // Collided equations already have C1 != C4 at a shared positive index.
    if (eq.origin == EquationOrigin::collided) return true;
    // C1 = A1 and C4 = -A4 in the two-sided and direct encodings.
    return big(eq.a[0]) * table.x(v[0]) != -big(eq.a[3]) * table.x(v[3]);
}

}  // namespace sixterm
