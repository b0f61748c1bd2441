#pragma once

// Balancing-like sequences x_{n+1} = A x_n - x_{n-1} (x_0 = 0, x_1 = 1) and
// their Lucas-balancing-like companions y_{n+1} = A y_n - y_{n-1}
// (y_0 = 2, y_1 = A). A = 6 gives the balancing numbers.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace sixterm {

struct SequenceParams {
    std::int64_t A = 3;
};

class SequenceTable {
public:
    /// Terms x_0..x_N and y_0..y_N. Throws std::invalid_argument for A < 2 or N < 1.
    static SequenceTable build(SequenceParams params, int N);

    SequenceParams params() const { return params_; }
    std::int64_t A() const { return params_.A; }
    int max_index() const { return static_cast<int>(x_.size()) - 1; }

    const mpz_class& x(int n) const { return x_.at(static_cast<std::size_t>(n)); }
    const mpz_class& y(int n) const { return y_.at(static_cast<std::size_t>(n)); }
    std::span<const mpz_class> xs() const { return x_; }
    std::span<const mpz_class> ys() const { return y_; }

    /// n with x_n == value, 0 for value 0, empty otherwise.
    /// Requires A >= 3 so that x_1 < x_2 < ... is strictly increasing.
    std::optional<int> index_of(const mpz_class& value) const;

private:
    SequenceParams params_;
    std::vector<mpz_class> x_;
    std::vector<mpz_class> y_;
};

/// gcd(x_m, x_n) == x_{gcd(m, n)}.
bool check_gcd_identity(const SequenceTable& table, int m, int n);
bool check_gcd_identity(SequenceParams params, int m, int n);

/// (A^2 - 4) x_n^2 + 4 == y_n^2.
bool check_square_identity(const SequenceTable& table, int n);

/// Outcome of comparing x_n against gamma^{n-2} (lower) and gamma^{n-1} (upper).
struct GrowthCheck {
    bool lower = false;
    bool upper = false;
    bool holds() const { return lower && upper; }
};

/// Exact test of gamma^{n-2} <= x_n <= gamma^{n-1}, each side reported
/// separately. The upper side is known to fail for some small (A, n).
GrowthCheck check_growth_bounds(SequenceParams params, int n);

}  // namespace sixterm
