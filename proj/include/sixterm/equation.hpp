#pragma once

// Input model for
//     C1 x_{n1} + C2 x_{n2} + C3 x_{n3} = C4 x_{n4} + C5 x_{n5} + C6 x_{n6}
// and its single-sided searchable form
//     A1 x_{m1} + A2 x_{m2} + ... + A6 x_{m6} = 0,
// where coefficient slot i is attached to the i-th largest index.

#include <array>
#include <cstdint>
#include <optional>

namespace sixterm {

class SequenceTable;

using Coefficients = std::array<std::int64_t, 6>;
using IndexTuple = std::array<int, 6>;

/// C1..C6 of the two-sided equation; C1 C2 C3 != 0.
struct CoefficientSet {
    Coefficients c{};
};

/// X = max |C_i|. Throws std::invalid_argument when C1 C2 C3 == 0.
std::int64_t size_parameter(const CoefficientSet& c);

enum class EquationOrigin {
    direct,     // A1..A6 supplied as-is
    two_sided,  // (C1, C2, C3, -C4, -C5, -C6)
    collided,   // n1 == n4: (C1 - C4, C2, C3, -C5, -C6, 0)
};

struct NormalizedEquation {
    Coefficients a{};
    std::int64_t X = 1;
    EquationOrigin origin = EquationOrigin::direct;
};

/// Single-sided form of a two-sided equation. X is always taken from the
/// original coefficients. Throws std::invalid_argument when C1 C2 C3 == 0,
/// or when collide is set and C1 == C4 (the leading term would vanish).
NormalizedEquation normalize(const CoefficientSet& c, bool collide);

/// Searchable equation from A1..A6 directly (A1 != 0). X defaults to max |A_i|.
NormalizedEquation direct_equation(const Coefficients& a, std::optional<std::int64_t> X = std::nullopt);

/// Sum A_i x_{m_i} == 0, exactly.
bool satisfies(const Coefficients& a, const IndexTuple& m, const SequenceTable& table);

/// The original indices (n1..n6) that a ranked tuple (m1..m6) encodes.
/// For collided equations n4 = n1 and the unused sixth slot must sit at 0;
/// returns empty otherwise.
std::optional<IndexTuple> decode_original(const NormalizedEquation& eq, const IndexTuple& m);

/// The strict two-sided constraints: n1 > n2 > n3 >= 0, n4 > n5 > n6 >= 0 and
/// C1 x_{n1} != C4 x_{n4}.
bool satisfies_original_form(const NormalizedEquation& eq, const IndexTuple& m, const SequenceTable& table);

}  // namespace sixterm
