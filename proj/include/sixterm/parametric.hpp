#pragma once

// Parametric solution families.
//
// Shifting every index of a solution by the same t stays a solution exactly
// when gamma is a root of the exponent polynomial sum a_q X^{e_q}, i.e. when
// X^2 - A X + 1 divides it. Divisibility is decided by exact reduction.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sixterm {

class SequenceTable;

struct Term {
    unsigned exponent = 0;
    std::int64_t coefficient = 0;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse integer polynomial; terms kept with strictly decreasing exponents
/// and nonzero coefficients.
class SparsePolynomial {
public:
    SparsePolynomial() = default;

    /// Combines like exponents, drops zero coefficients, sorts descending.
    explicit SparsePolynomial(std::vector<Term> terms);

    std::span<const Term> terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    unsigned degree() const { return terms_.empty() ? 0 : terms_.front().exponent; }

    friend SparsePolynomial operator+(const SparsePolynomial& p, const SparsePolynomial& q);
    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
    std::vector<Term> terms_;
};

/// p(X) == r1 X + r0 (mod X^2 - A X + 1).
struct CharRemainder {
    mpz_class r1;
    mpz_class r0;
    bool is_zero() const { return r1 == 0 && r0 == 0; }
};

/// Horner evaluation with X^2 -> A X - 1 after every step. Requires A >= 3.
CharRemainder reduce_mod_char(const SparsePolynomial& p, std::int64_t A);

/// gamma(A) is a root of p.
bool is_gamma_root(const SparsePolynomial& p, std::int64_t A);

/// sum_q a_q x_{t + e_q}. The table must reach t + degree(p).
mpz_class shifted_sum(const SparsePolynomial& p, const SequenceTable& table, int t);

enum class FamilyForm { three_term, four_term, five_term, six_term };

std::string_view to_string(FamilyForm form);
FamilyForm form_for_terms(std::size_t n_terms);

/// A family of solutions (t + e_1, ..., t + e_L) with coefficients a_1..a_L,
/// valid for every shift t >= 0. Offsets strictly decrease and end at 0.
struct FamilyRecord {
    std::int64_t A = 3;
    std::vector<unsigned> offsets;
    std::vector<std::int64_t> coefficients;
    FamilyForm form = FamilyForm::three_term;

    SparsePolynomial polynomial() const;

    friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

/// Checks the shifted sums vanish for every t in [0, base_range]. Throws
/// std::invalid_argument for malformed records.
bool verify_family(const FamilyRecord& f, int base_range);

struct ARange {
    std::int64_t lo = 3;
    std::int64_t hi = 3;
    std::size_t size() const { return hi < lo ? 0 : static_cast<std::size_t>(hi - lo + 1); }
};

/// Caps for the nonzero offsets of an L-term family: the first L-1 of the
/// form-2 caps (m, l, k, j, i).
std::vector<unsigned> family_offset_caps(std::size_t n_terms, std::int64_t X);

/// Every family whose coefficients come from `pool` (one tuple per shape,
/// length 3..6, all entries nonzero) with offsets inside the envelope, for
/// every A in the range. Sorted by A, then offsets, then coefficients.
std::vector<FamilyRecord> enumerate_families(ARange range, std::span<const std::vector<std::int64_t>> pool,
                                             std::int64_t X, unsigned workers = 1);

/// Number of offset tuples enumerate_families will test.
double family_workload(ARange range, std::span<const std::vector<std::int64_t>> pool, std::int64_t X);

/// Every tuple over {-1, +1} of length 3 through 6.
std::vector<std::vector<std::int64_t>> unit_coefficient_pool();

}  // namespace sixterm
