#include "sixterm/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "sixterm/parallel.hpp"
#include "sixterm/sequence.hpp"

namespace sixterm {

namespace {

mpz_class big(std::int64_t v) { return static_cast<long>(v); }

// Open-addressed map from A1 x_n mod 2^64 to n. Nearly every probe misses,
// so the table is kept sparse enough that a miss usually lands on an empty
// slot immediately.
class ResidueIndex {
public:
    void insert(std::uint64_t key, int n) {
        if ((count_ + 1) * 4 > slots_.size()) grow();
        place(key, n);
        ++count_;
    }

    template <class Fn>
    void for_each_match(std::uint64_t key, Fn&& fn) const {
        if (slots_.empty()) return;
        for (std::size_t i = slot(key);; i = (i + 1) & mask_) {
            const Slot& s = slots_[i];
            if (s.n == 0) return;
            if (s.key == key) fn(s.n);
        }
    }

private:
    struct Slot {
        std::uint64_t key = 0;
        int n = 0;  // 0 marks an empty slot; stored indices are >= 1
    };

    std::size_t slot(std::uint64_t key) const {
        return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ULL) >> shift_) & mask_;
    }

    void place(std::uint64_t key, int n) {
        std::size_t i = slot(key);
        while (slots_[i].n != 0) i = (i + 1) & mask_;
        slots_[i] = {key, n};
    }

    void grow() {
        const std::size_t size = slots_.empty() ? 64 : slots_.size() * 2;
        std::vector<Slot> old = std::move(slots_);
        slots_.assign(size, Slot{});
        mask_ = size - 1;
        shift_ = 64 - static_cast<unsigned>(std::countr_zero(size));
        for (const auto& s : old)
            if (s.n != 0) place(s.key, s.n);
    }

    std::vector<Slot> slots_;
    std::size_t count_ = 0;
    std::size_t mask_ = 0;
    unsigned shift_ = 64;
};

// Positions 1..5 (m2..m6) are looped from the innermost m6 outward; the
// coefficient choice for position p lives in space.rest[p - 1].
class ShardScanner {
public:
    ShardScanner(const SequenceTable& table, const CoefficientSpace& space, const IndexCaps& caps)
        : table_(table), space_(space), caps_(caps) {
        if (space_.leading == 0) throw std::invalid_argument("leading coefficient must be nonzero");
        if (table_.A() < 3) throw std::invalid_argument("search requires A >= 3");
        if (table_.max_index() < static_cast<int>(caps_[0]))
            throw std::invalid_argument("sequence table shorter than the m1 cap");
        chosen_[0] = space_.leading;
    }

    std::vector<SolutionRecord> run_residue() {
        build_residues();
        descend_residue(5, 0, 0);
        return std::move(out_);
    }

    std::vector<SolutionRecord> run_exact() {
        descend_exact(5, 0, mpz_class(0));
        return std::move(out_);
    }

private:
    void build_residues() {
        const unsigned top = caps_[0];
        const auto a = static_cast<std::uint64_t>(table_.A());
        residue_.assign(top + 1, 0);
        if (top >= 1) residue_[1] = 1;
        for (unsigned n = 2; n <= top; ++n) residue_[n] = a * residue_[n - 1] - residue_[n - 2];
        const auto lead = static_cast<std::uint64_t>(space_.leading);
        for (unsigned n = 1; n <= top; ++n) lookup_.insert(lead * residue_[n], static_cast<int>(n));
        for (std::size_t p = 0; p < 5; ++p)
            for (auto c : space_.rest[p]) wide_[p].push_back(static_cast<std::uint64_t>(c));
    }

    void descend_residue(int pos, int lo, std::uint64_t partial) {
        const int hi = static_cast<int>(caps_[static_cast<std::size_t>(pos)]);
        const auto& choices = wide_[static_cast<std::size_t>(pos - 1)];
        const auto& signed_choices = space_.rest[static_cast<std::size_t>(pos - 1)];
        for (int idx = lo; idx <= hi; ++idx) {
            m_[static_cast<std::size_t>(pos)] = idx;
            const std::uint64_t x = residue_[static_cast<std::size_t>(idx)];
            for (std::size_t k = 0; k < choices.size(); ++k) {
                chosen_[static_cast<std::size_t>(pos)] = signed_choices[k];
                const std::uint64_t next = partial + choices[k] * x;
                if (pos > 1) {
                    descend_residue(pos - 1, idx, next);
                    continue;
                }
                // A1 x_{m1} must cancel the partial sum: A1 x_{m1} == -next (mod 2^64).
                lookup_.for_each_match(std::uint64_t{0} - next, [&](int n) {
                    if (n > idx) confirm(n);
                });
            }
        }
    }

    void descend_exact(int pos, int lo, const mpz_class& partial) {
        const int hi = static_cast<int>(caps_[static_cast<std::size_t>(pos)]);
        const auto& choices = space_.rest[static_cast<std::size_t>(pos - 1)];
        const mpz_class lead = big(space_.leading);
        for (int idx = lo; idx <= hi; ++idx) {
            m_[static_cast<std::size_t>(pos)] = idx;
            for (const auto c : choices) {
                chosen_[static_cast<std::size_t>(pos)] = c;
                const mpz_class next = partial + big(c) * table_.x(idx);
                if (pos > 1) {
                    descend_exact(pos - 1, idx, next);
                    continue;
                }
                const mpz_class residual = -next;
                if (!mpz_divisible_p(residual.get_mpz_t(), lead.get_mpz_t())) continue;
                const mpz_class target = residual / lead;
                if (target <= 0) continue;
                const auto n = table_.index_of(target);
                if (n && *n > idx && *n <= static_cast<int>(caps_[0])) confirm(*n);
            }
        }
    }

    void confirm(int m1) {
        m_[0] = m1;
        SolutionRecord r{table_.A(), m_, chosen_, true};
        // Residue matches are only candidates; exact substitution decides.
        if (satisfies(r.coefficients, r.indices, table_)) out_.push_back(r);
    }

    const SequenceTable& table_;
    const CoefficientSpace& space_;
    IndexCaps caps_;
    IndexTuple m_{};
    Coefficients chosen_{};
    std::vector<std::uint64_t> residue_;
    ResidueIndex lookup_;
    std::array<std::vector<std::uint64_t>, 5> wide_;
    std::vector<SolutionRecord> out_;
};

void check_range(ARange range, std::int64_t X) {
    const std::int64_t cap = a_cap(X);
    if (range.lo < 3 || range.hi > cap || range.lo > range.hi)
        throw std::invalid_argument("A range [" + std::to_string(range.lo) + ", " + std::to_string(range.hi) +
                                    "] must lie within [3, " + std::to_string(cap) + "]");
}

template <class Filter>
std::vector<SolutionRecord> sweep(ARange range, const CoefficientSpace& space, const IndexCaps& caps,
                                  const SearchOptions& options, Filter&& keep) {
    std::vector<std::vector<SolutionRecord>> shards(range.size());
    parallel_for(range.size(), options.workers, [&](std::size_t s) {
        const std::int64_t A = range.lo + static_cast<std::int64_t>(s);
        const auto table = SequenceTable::build({A}, std::max(1, static_cast<int>(caps[0])));
        auto found = scan_shard(table, space, caps, options.resolution);
        std::erase_if(found, [&](const SolutionRecord& r) { return !keep(r, table); });
        shards[s] = std::move(found);
    });
    std::vector<SolutionRecord> merged;
    for (auto& shard : shards) std::move(shard.begin(), shard.end(), std::back_inserter(merged));
    return merged;
}

}  // namespace

CoefficientSpace CoefficientSpace::single(const Coefficients& a) {
    CoefficientSpace s;
    s.leading = a[0];
    for (std::size_t p = 0; p < 5; ++p) s.rest[p] = {a[p + 1]};
    return s;
}

CoefficientSpace CoefficientSpace::sign_patterns() {
    CoefficientSpace s;
    s.leading = 1;
    for (auto& r : s.rest) r = {-1, 0, 1};
    return s;
}

std::size_t CoefficientSpace::pattern_count() const {
    std::size_t n = 1;
    for (const auto& r : rest) n *= r.size();
    return n;
}

std::vector<SolutionRecord> scan_shard(const SequenceTable& table, const CoefficientSpace& space,
                                       const IndexCaps& caps, Resolution resolution) {
    ShardScanner scanner(table, space, caps);
    auto out = resolution == Resolution::residue_filter ? scanner.run_residue() : scanner.run_exact();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SolutionRecord> find_sporadic(std::int64_t A, const NormalizedEquation& eq, const BoundSet& b,
                                          Resolution resolution) {
    if (A < 3 || A > b.a_cap)
        throw std::invalid_argument("A = " + std::to_string(A) + " outside [3, " + std::to_string(b.a_cap) + "]");
    if (eq.a[0] == 0) throw std::invalid_argument("leading coefficient A1 must be nonzero");
    const auto table = SequenceTable::build({A}, std::max(1, static_cast<int>(b.sporadic[0])));
    return scan_shard(table, CoefficientSpace::single(eq.a), b.sporadic, resolution);
}

std::vector<SolutionRecord> search_all(const NormalizedEquation& eq, std::optional<ARange> a_override,
                                       const SearchOptions& options) {
    if (eq.a[0] == 0) throw std::invalid_argument("leading coefficient A1 must be nonzero");
    const ARange range = a_override.value_or(ARange{3, a_cap(eq.X)});
    check_range(range, eq.X);
    const IndexCaps caps = options.caps.value_or(sporadic_bounds(eq.X));
    auto out = sweep(range, CoefficientSpace::single(eq.a), caps, options,
                     [&](const SolutionRecord& r, const SequenceTable& table) {
                         return !options.strict || satisfies_original_form(eq, r.indices, table);
                     });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double search_workload(ARange range, const IndexCaps& caps, const CoefficientSpace& space) {
    // tuples[v] = number of ways to place positions p..5 given m_{p} = v
    const unsigned top = *std::max_element(caps.begin() + 1, caps.end());
    std::vector<double> ways(top + 1, 0.0);
    for (unsigned v = 0; v <= caps[5]; ++v) ways[v] = 1;
    for (int p = 4; p >= 1; --p) {
        std::vector<double> next(top + 1, 0.0);
        double prefix = 0;
        for (unsigned v = 0; v <= top; ++v) {
            prefix += ways[v];
            if (v <= caps[static_cast<std::size_t>(p)]) next[v] = prefix;
        }
        ways = std::move(next);
    }
    double tuples = 0;
    for (double w : ways) tuples += w;
    return tuples * static_cast<double>(space.pattern_count()) * static_cast<double>(range.size());
}

SolutionRecord canonicalize(const SolutionRecord& r) {
    std::vector<std::pair<int, std::int64_t>> terms;
    for (std::size_t i = 0; i < 6; ++i)
        if (r.coefficients[i] != 0 && r.indices[i] != 0) terms.emplace_back(r.indices[i], r.coefficients[i]);
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second > b.second;
    });
    if (!terms.empty() && terms.front().second < 0) {
        for (auto& t : terms) t.second = -t.second;
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second > b.second;
        });
    }
    SolutionRecord c;
    c.A = r.A;
    c.residual_check = r.residual_check;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        c.indices[i] = terms[i].first;
        c.coefficients[i] = terms[i].second;
    }
    return c;
}

SolutionRecord reference_solution() { return {5, {2, 1, 1, 1, 1, 1}, {1, -1, -1, -1, -1, -1}, true}; }

ReproResult reproduce_example(const SearchOptions& options) {
    ReproResult result;
    result.bounds = compute_bounds(1);
    const IndexCaps caps = options.caps.value_or(result.bounds.sporadic);
    const ARange range{3, result.bounds.a_cap};
    auto raw = sweep(range, CoefficientSpace::sign_patterns(), caps, options,
                     [&](const SolutionRecord& r, const SequenceTable& table) {
                         return !options.strict ||
                                satisfies_original_form(direct_equation(r.coefficients, 1), r.indices, table);
                     });
    result.raw_hits = raw.size();
    result.solutions.reserve(raw.size());
    for (const auto& r : raw) result.solutions.push_back(canonicalize(r));
    std::sort(result.solutions.begin(), result.solutions.end());
    result.solutions.erase(std::unique(result.solutions.begin(), result.solutions.end()), result.solutions.end());
    result.reference_found =
        std::binary_search(result.solutions.begin(), result.solutions.end(), reference_solution());
    return result;
}

}  // namespace sixterm
