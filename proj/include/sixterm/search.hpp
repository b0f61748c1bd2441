#pragma once

// Exhaustive enumeration of sporadic solutions of
//     A1 x_{m1} + ... + A6 x_{m6} = 0,   m1 > m2 >= m3 >= m4 >= m5 >= m6 >= 0,
// inside the caps of a BoundSet. The five lower indices are looped with
// partial sums carried down the nest; m1 is resolved by membership of the
// residual in the sequence, never by a sixth loop.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sixterm/bounds.hpp"
#include "sixterm/equation.hpp"
#include "sixterm/parametric.hpp"

namespace sixterm {

class SequenceTable;

struct SolutionRecord {
    std::int64_t A = 3;
    IndexTuple indices{};
    Coefficients coefficients{};
    bool residual_check = true;

    friend bool operator==(const SolutionRecord&, const SolutionRecord&) = default;
    friend auto operator<=>(const SolutionRecord&, const SolutionRecord&) = default;
};

using IndexCaps = std::array<unsigned, 6>;  // caps for m1..m6

/// Allowed coefficients per slot. A fixed equation has one choice per slot;
/// the reproduction sweep allows {-1, 0, 1} in slots 2..6.
struct CoefficientSpace {
    std::int64_t leading = 1;
    std::array<std::vector<std::int64_t>, 5> rest;

    static CoefficientSpace single(const Coefficients& a);
    /// Leading +1 and {-1, 0, 1} in every other slot.
    static CoefficientSpace sign_patterns();
    std::size_t pattern_count() const;
};

enum class Resolution {
    residue_filter,  // match residues mod 2^64, confirm candidates exactly
    exact_lookup,    // exact partial sums, divisibility and index_of
};

struct SearchOptions {
    unsigned workers = 1;
    bool strict = false;  // keep only records meeting the two-sided constraints
    Resolution resolution = Resolution::residue_filter;
    std::optional<IndexCaps> caps;  // replaces the BoundSet caps when set
};

/// All records for one A and one coefficient space. Every emitted record is
/// re-verified by substitution. The table must reach caps[0].
std::vector<SolutionRecord> scan_shard(const SequenceTable& table, const CoefficientSpace& space,
                                       const IndexCaps& caps, Resolution resolution);

/// Records for a single A. Requires 3 <= A <= b.a_cap and eq.a[0] != 0.
std::vector<SolutionRecord> find_sporadic(std::int64_t A, const NormalizedEquation& eq, const BoundSet& b,
                                          Resolution resolution = Resolution::residue_filter);

/// find_sporadic over every A in the range (default [3, a_cap(X)]), ordered
/// by A then indices. Throws std::invalid_argument if the override leaves
/// [3, a_cap(X)].
std::vector<SolutionRecord> search_all(const NormalizedEquation& eq, std::optional<ARange> a_override = std::nullopt,
                                       const SearchOptions& options = {});

/// Leaves visited by a sweep: A values x index tuples x coefficient patterns.
double search_workload(ARange range, const IndexCaps& caps, const CoefficientSpace& space);

/// Canonical form of a solution: zero-coefficient and index-0 terms dropped,
/// remaining (index, coefficient) pairs sorted by descending index then
/// descending coefficient, leading coefficient made positive, padded with
/// (0, 0).
SolutionRecord canonicalize(const SolutionRecord& r);

struct ReproResult {
    BoundSet bounds;
    std::vector<SolutionRecord> solutions;  // canonical, deduplicated, sorted
    std::size_t raw_hits = 0;
    bool reference_found = false;
};

/// The reference hit x_2 = x_1 + x_1 + x_1 + x_1 + x_1 at A = 5.
SolutionRecord reference_solution();

/// Sweeps A in [3, 308], every pattern of CoefficientSpace::sign_patterns()
/// and the X = 1 sporadic caps.
ReproResult reproduce_example(const SearchOptions& options = {});

}  // namespace sixterm
