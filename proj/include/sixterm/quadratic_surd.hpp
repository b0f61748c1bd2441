#pragma once

// Exact arithmetic on elements (u + v*sqrt(d)) / 2 of a real quadratic field.
//
// Only the subring needed here is supported: powers of the unit
// gamma = (A + sqrt(A^2 - 4)) / 2 and its conjugate. Products assert that
// both interior halvings are exact; anything else is a usage error.

#include <cstdint>
#include <iosfwd>

#include <gmpxx.h>

namespace sixterm {

class QuadraticSurd {
public:
    /// Throws std::invalid_argument unless d >= 2 and d is not a perfect square.
    QuadraticSurd(mpz_class u, mpz_class v, mpz_class d);

    /// The multiplicative identity (2 + 0*sqrt(d)) / 2.
    static QuadraticSurd one(const mpz_class& d);

    const mpz_class& u() const { return u_; }
    const mpz_class& v() const { return v_; }
    const mpz_class& d() const { return d_; }

    QuadraticSurd conjugate() const;

    friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
        return a.u_ == b.u_ && a.v_ == b.v_ && a.d_ == b.d_;
    }

private:
    mpz_class u_;
    mpz_class v_;
    mpz_class d_;
};

/// gamma = (A + sqrt(A^2 - 4)) / 2, the larger root of X^2 - A X + 1.
/// Throws std::invalid_argument for A <= 2.
QuadraticSurd gamma_of(std::int64_t A);

/// psi = gamma_of(3) = (3 + sqrt 5) / 2, the smallest admissible gamma.
const QuadraticSurd& psi();

/// Exact product. Throws std::invalid_argument on mismatched radicands and
/// std::domain_error when a halving is not exact.
QuadraticSurd mul(const QuadraticSurd& a, const QuadraticSurd& b);

QuadraticSurd add(const QuadraticSurd& a, const QuadraticSurd& b);
QuadraticSurd sub(const QuadraticSurd& a, const QuadraticSurd& b);

/// base^k for k >= 0 by repeated squaring.
QuadraticSurd pow(const QuadraticSurd& base, unsigned k);

/// Three-way sign of (a - B) decided with integers only.
int compare(const QuadraticSurd& a, const mpz_class& B);

/// a <= B, decided with integers only.
inline bool le_integer(const QuadraticSurd& a, const mpz_class& B) { return compare(a, B) <= 0; }

/// Largest t >= 0 with base^t <= B. Requires base > 1 and B >= 1.
unsigned max_power_leq(const QuadraticSurd& base, const mpz_class& B);

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& s);

}  // namespace sixterm
