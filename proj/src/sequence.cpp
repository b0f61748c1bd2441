#include "sixterm/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sixterm/quadratic_surd.hpp"

namespace sixterm {

SequenceTable SequenceTable::build(SequenceParams params, int N) {
    if (params.A < 2) throw std::invalid_argument("sequence requires A >= 2, got " + std::to_string(params.A));
    if (N < 1) throw std::invalid_argument("sequence table requires N >= 1, got " + std::to_string(N));

    SequenceTable t;
    t.params_ = params;
    const auto n_terms = static_cast<std::size_t>(N) + 1;
    t.x_.reserve(n_terms);
    t.y_.reserve(n_terms);
    const mpz_class a = static_cast<long>(params.A);
    t.x_.emplace_back(0);
    t.x_.emplace_back(1);
    t.y_.emplace_back(2);
    t.y_.push_back(a);
    for (std::size_t n = 2; n < n_terms; ++n) {
        t.x_.push_back(a * t.x_[n - 1] - t.x_[n - 2]);
        t.y_.push_back(a * t.y_[n - 1] - t.y_[n - 2]);
    }
    return t;
}

std::optional<int> SequenceTable::index_of(const mpz_class& value) const {
    if (value == 0) return 0;
    const auto tail = std::span(x_).subspan(1);
    const auto it = std::lower_bound(tail.begin(), tail.end(), value);
    if (it == tail.end() || *it != value) return std::nullopt;
    return static_cast<int>(it - tail.begin()) + 1;
}

bool check_gcd_identity(const SequenceTable& table, int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("gcd identity requires m, n >= 1");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), table.x(m).get_mpz_t(), table.x(n).get_mpz_t());
    return g == table.x(std::gcd(m, n));
}

bool check_gcd_identity(SequenceParams params, int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("gcd identity requires m, n >= 1");
    return check_gcd_identity(SequenceTable::build(params, std::max(m, n)), m, n);
}

bool check_square_identity(const SequenceTable& table, int n) {
    const mpz_class a = static_cast<long>(table.A());
    const mpz_class& x = table.x(n);
    const mpz_class& y = table.y(n);
    return (a * a - 4) * x * x + 4 == y * y;
}

GrowthCheck check_growth_bounds(SequenceParams params, int n) {
    if (n < 1) throw std::invalid_argument("growth bounds require n >= 1");
    const QuadraticSurd g = gamma_of(params.A);
    const mpz_class xn = SequenceTable::build(params, std::max(n, 1)).x(n);

    GrowthCheck out;
    // gamma^{-1} is the conjugate delta.
    const QuadraticSurd low = n >= 2 ? pow(g, static_cast<unsigned>(n - 2)) : g.conjugate();
    out.lower = compare(low, xn) <= 0;
    out.upper = compare(pow(g, static_cast<unsigned>(n - 1)), xn) >= 0;
    return out;
}

}  // namespace sixterm
