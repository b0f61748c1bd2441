#include "sixterm/parametric.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "sixterm/bounds.hpp"
#include "sixterm/parallel.hpp"
#include "sixterm/sequence.hpp"

namespace sixterm {

namespace {

void require_a(std::int64_t A) {
    if (A < 3) throw std::invalid_argument("characteristic polynomial requires A >= 3, got " + std::to_string(A));
}

mpz_class big(std::int64_t v) { return static_cast<long>(v); }

// Per-A residues of x_n and x_{n-1} modulo 2^64, used as a necessary
// condition before the exact reduction.
struct ResidueTable {
    std::vector<std::uint64_t> x;  // x_n mod 2^64
    ResidueTable(std::int64_t A, unsigned n_max) : x(n_max + 1) {
        const auto a = static_cast<std::uint64_t>(A);
        x[0] = 0;
        if (n_max >= 1) x[1] = 1;
        for (unsigned n = 2; n <= n_max; ++n) x[n] = a * x[n - 1] - x[n - 2];
    }
    // x_{-1} = -1
    std::uint64_t prev(unsigned e) const { return e == 0 ? ~std::uint64_t{0} : x[e - 1]; }
};

class FamilyScanner {
public:
    FamilyScanner(std::int64_t A, const std::vector<std::int64_t>& coeffs, const std::vector<unsigned>& caps,
                  const ResidueTable& residues, std::vector<FamilyRecord>& out)
        : A_(A), coeffs_(coeffs), caps_(caps), res_(residues), out_(out), offsets_(coeffs.size(), 0) {
        for (auto c : coeffs_) wcoeffs_.push_back(static_cast<std::uint64_t>(c));
        last_ = wcoeffs_.back();
    }

    void run() { descend(0, caps_.empty() ? 0 : caps_[0], 0, 0); }

private:
    // Level q picks offset e_q in [n_rest, hi], where n_rest leaves room for
    // the strictly smaller positive offsets still to come.
    void descend(std::size_t q, unsigned hi, std::uint64_t p1, std::uint64_t p0) {
        const std::size_t n_var = caps_.size();
        if (q == n_var) {
            // Constant term: contributes 0 to r1 and +a_L to r0.
            if (p1 == 0 && p0 == last_) emit();
            return;
        }
        const auto lo = static_cast<unsigned>(n_var - q);
        const unsigned top = std::min(hi, caps_[q]);
        for (unsigned e = lo; e <= top; ++e) {
            offsets_[q] = e;
            descend(q + 1, e - 1, p1 + wcoeffs_[q] * res_.x[e], p0 + wcoeffs_[q] * res_.prev(e));
        }
    }

    void emit() {
        FamilyRecord f;
        f.A = A_;
        f.offsets = offsets_;
        f.offsets.back() = 0;
        f.coefficients = coeffs_;
        f.form = form_for_terms(coeffs_.size());
        if (reduce_mod_char(f.polynomial(), A_).is_zero()) out_.push_back(std::move(f));
    }

    std::int64_t A_;
    const std::vector<std::int64_t>& coeffs_;
    const std::vector<unsigned>& caps_;
    const ResidueTable& res_;
    std::vector<FamilyRecord>& out_;
    std::vector<unsigned> offsets_;
    std::vector<std::uint64_t> wcoeffs_;
    std::uint64_t last_ = 0;
};

void validate_pool(std::span<const std::vector<std::int64_t>> pool) {
    for (const auto& tuple : pool) {
        if (tuple.size() < 3 || tuple.size() > 6)
            throw std::invalid_argument("coefficient tuples must have 3 to 6 entries");
        if (std::any_of(tuple.begin(), tuple.end(), [](std::int64_t c) { return c == 0; }))
            throw std::invalid_argument("family coefficients must be nonzero");
    }
}

// Strictly decreasing tuples e_1 > ... > e_k >= 1 with e_q <= caps[q].
double count_offset_tuples(const std::vector<unsigned>& caps) {
    if (caps.empty()) return 1;
    const unsigned top = caps[0];
    // ways[e] = number of valid suffixes starting at level q with e_q = e
    std::vector<double> ways(top + 2, 0.0);
    const std::size_t k = caps.size();
    for (unsigned e = 1; e <= caps[k - 1]; ++e) ways[e] = 1;
    for (std::size_t q = k - 1; q-- > 0;) {
        std::vector<double> next(top + 2, 0.0);
        double prefix = 0;
        for (unsigned e = 1; e <= top; ++e) {
            prefix += ways[e - 1];
            if (e <= caps[q]) next[e] = prefix;
        }
        ways = std::move(next);
    }
    double total = 0;
    for (double w : ways) total += w;
    return total;
}

}  // namespace

SparsePolynomial::SparsePolynomial(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
    for (const auto& t : terms) {
        if (!terms_.empty() && terms_.back().exponent == t.exponent)
            terms_.back().coefficient += t.coefficient;
        else
            terms_.push_back(t);
        if (terms_.back().coefficient == 0) terms_.pop_back();
    }
}

SparsePolynomial operator+(const SparsePolynomial& p, const SparsePolynomial& q) {
    std::vector<Term> all(p.terms_.begin(), p.terms_.end());
    all.insert(all.end(), q.terms_.begin(), q.terms_.end());
    return SparsePolynomial(std::move(all));
}

CharRemainder reduce_mod_char(const SparsePolynomial& p, std::int64_t A) {
    require_a(A);
    const mpz_class a = big(A);
    CharRemainder r{0, 0};
    const auto terms = p.terms();
    if (terms.empty()) return r;
    // Horner from the top exponent down; (r1 X + r0) X == (A r1 + r0) X - r1.
    std::size_t next = 0;
    for (long e = terms.front().exponent; e >= 0; --e) {
        if (e != static_cast<long>(terms.front().exponent)) {
            mpz_class r1 = a * r.r1 + r.r0;
            r.r0 = -r.r1;
            r.r1 = std::move(r1);
        }
        if (next < terms.size() && terms[next].exponent == static_cast<unsigned>(e)) {
            r.r0 += big(terms[next].coefficient);
            ++next;
        }
    }
    return r;
}

bool is_gamma_root(const SparsePolynomial& p, std::int64_t A) { return reduce_mod_char(p, A).is_zero(); }

mpz_class shifted_sum(const SparsePolynomial& p, const SequenceTable& table, int t) {
    mpz_class s = 0;
    for (const auto& term : p.terms()) s += big(term.coefficient) * table.x(t + static_cast<int>(term.exponent));
    return s;
}

std::string_view to_string(FamilyForm form) {
    switch (form) {
        case FamilyForm::three_term: return "three-term";
        case FamilyForm::four_term: return "four-term";
        case FamilyForm::five_term: return "five-term";
        case FamilyForm::six_term: return "six-term";
    }
    return "unknown";
}

FamilyForm form_for_terms(std::size_t n_terms) {
    switch (n_terms) {
        case 3: return FamilyForm::three_term;
        case 4: return FamilyForm::four_term;
        case 5: return FamilyForm::five_term;
        case 6: return FamilyForm::six_term;
        default: throw std::invalid_argument("families have 3 to 6 terms, got " + std::to_string(n_terms));
    }
}

SparsePolynomial FamilyRecord::polynomial() const {
    std::vector<Term> terms;
    terms.reserve(offsets.size());
    for (std::size_t q = 0; q < offsets.size() && q < coefficients.size(); ++q)
        terms.push_back({offsets[q], coefficients[q]});
    return SparsePolynomial(std::move(terms));
}

bool verify_family(const FamilyRecord& f, int base_range) {
    if (f.A < 3) throw std::invalid_argument("family requires A >= 3");
    if (base_range < 0) throw std::invalid_argument("base_range must be >= 0");
    if (f.offsets.empty() || f.offsets.size() != f.coefficients.size())
        throw std::invalid_argument("family offsets and coefficients must be non-empty and equally long");
    for (std::size_t q = 1; q < f.offsets.size(); ++q)
        if (f.offsets[q] >= f.offsets[q - 1]) throw std::invalid_argument("family offsets must strictly decrease");
    if (f.offsets.back() != 0) throw std::invalid_argument("family offsets must end at 0");

    const SparsePolynomial p = f.polynomial();
    const auto table = SequenceTable::build({f.A}, std::max(1, base_range + static_cast<int>(f.offsets.front())));
    for (int t = 0; t <= base_range; ++t)
        if (shifted_sum(p, table, t) != 0) return false;
    return true;
}

std::vector<unsigned> family_offset_caps(std::size_t n_terms, std::int64_t X) {
    form_for_terms(n_terms);
    const auto form2 = parametric_bounds(X).form2;
    return {form2.begin(), form2.begin() + static_cast<std::ptrdiff_t>(n_terms - 1)};
}

std::vector<FamilyRecord> enumerate_families(ARange range, std::span<const std::vector<std::int64_t>> pool,
                                             std::int64_t X, unsigned workers) {
    if (range.lo < 3) throw std::invalid_argument("family enumeration requires A >= 3");
    if (range.hi > a_cap(X)) throw std::invalid_argument("A range exceeds a_cap(X) = " + std::to_string(a_cap(X)));
    validate_pool(pool);

    std::vector<std::vector<unsigned>> caps_by_len(7);
    unsigned top = 1;
    for (std::size_t len = 3; len <= 6; ++len) {
        caps_by_len[len] = family_offset_caps(len, X);
        top = std::max(top, caps_by_len[len].front());
    }

    std::vector<std::vector<FamilyRecord>> shards(range.size());
    parallel_for(range.size(), workers, [&](std::size_t s) {
        const std::int64_t A = range.lo + static_cast<std::int64_t>(s);
        const ResidueTable residues(A, top);
        auto& out = shards[s];
        for (const auto& tuple : pool) FamilyScanner(A, tuple, caps_by_len[tuple.size()], residues, out).run();
        std::sort(out.begin(), out.end(), [](const FamilyRecord& a, const FamilyRecord& b) {
            if (a.offsets != b.offsets) return a.offsets < b.offsets;
            return a.coefficients < b.coefficients;
        });
        out.erase(std::unique(out.begin(), out.end()), out.end());
    });

    std::vector<FamilyRecord> merged;
    for (auto& shard : shards) std::move(shard.begin(), shard.end(), std::back_inserter(merged));
    return merged;
}

double family_workload(ARange range, std::span<const std::vector<std::int64_t>> pool, std::int64_t X) {
    double per_a = 0;
    for (const auto& tuple : pool) {
        if (tuple.size() < 3 || tuple.size() > 6) continue;
        per_a += count_offset_tuples(family_offset_caps(tuple.size(), X));
    }
    return per_a * static_cast<double>(range.size());
}

std::vector<std::vector<std::int64_t>> unit_coefficient_pool() {
    std::vector<std::vector<std::int64_t>> pool;
    for (std::size_t len = 3; len <= 6; ++len) {
        for (unsigned mask = 0; mask < (1U << len); ++mask) {
            std::vector<std::int64_t> t(len);
            for (std::size_t q = 0; q < len; ++q) t[q] = ((mask >> q) & 1U) != 0 ? -1 : 1;
            pool.push_back(std::move(t));
        }
    }
    return pool;
}

}  // namespace sixterm
