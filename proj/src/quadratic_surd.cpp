#include "sixterm/quadratic_surd.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace sixterm {

namespace {

void check_radicand(const mpz_class& d) {
    if (d < 2) throw std::invalid_argument("radicand must be >= 2, got " + d.get_str());
    if (mpz_perfect_square_p(d.get_mpz_t()) != 0)
        throw std::invalid_argument("radicand must not be a perfect square, got " + d.get_str());
}

mpz_class exact_half(const mpz_class& n) {
    if (mpz_odd_p(n.get_mpz_t()) != 0)
        throw std::domain_error("surd product left the half-integer subring");
    mpz_class h;
    mpz_divexact_ui(h.get_mpz_t(), n.get_mpz_t(), 2);
    return h;
}

void check_same_field(const QuadraticSurd& a, const QuadraticSurd& b) {
    if (a.d() != b.d())
        throw std::invalid_argument("radicand mismatch: " + a.d().get_str() + " vs " + b.d().get_str());
}

int sgn(const mpz_class& z) { return mpz_sgn(z.get_mpz_t()); }

}  // namespace

QuadraticSurd::QuadraticSurd(mpz_class u, mpz_class v, mpz_class d)
    : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)) {
    check_radicand(d_);
}

QuadraticSurd QuadraticSurd::one(const mpz_class& d) { return {2, 0, d}; }

QuadraticSurd QuadraticSurd::conjugate() const { return {u_, -v_, d_}; }

QuadraticSurd gamma_of(std::int64_t A) {
    if (A <= 2) throw std::invalid_argument("gamma requires A >= 3, got " + std::to_string(A));
    mpz_class a = static_cast<long>(A);
    return {a, 1, a * a - 4};
}

const QuadraticSurd& psi() {
    static const QuadraticSurd value = gamma_of(3);
    return value;
}

QuadraticSurd mul(const QuadraticSurd& a, const QuadraticSurd& b) {
    check_same_field(a, b);
    // ((u1 + v1 r)/2) * ((u2 + v2 r)/2) = ((u1 u2 + d v1 v2)/2 + ((u1 v2 + u2 v1)/2) r) / 2
    mpz_class u = exact_half(a.u() * b.u() + a.d() * a.v() * b.v());
    mpz_class v = exact_half(a.u() * b.v() + b.u() * a.v());
    return {std::move(u), std::move(v), a.d()};
}

QuadraticSurd add(const QuadraticSurd& a, const QuadraticSurd& b) {
    check_same_field(a, b);
    return {a.u() + b.u(), a.v() + b.v(), a.d()};
}

QuadraticSurd sub(const QuadraticSurd& a, const QuadraticSurd& b) {
    check_same_field(a, b);
    return {a.u() - b.u(), a.v() - b.v(), a.d()};
}

QuadraticSurd pow(const QuadraticSurd& base, unsigned k) {
    QuadraticSurd result = QuadraticSurd::one(base.d());
    QuadraticSurd sq = base;
    while (k != 0) {
        if ((k & 1U) != 0) result = mul(result, sq);
        k >>= 1U;
        if (k != 0) sq = mul(sq, sq);
    }
    return result;
}

int compare(const QuadraticSurd& a, const mpz_class& B) {
    // sign of (u - 2B) + v sqrt(d); sqrt(d) is irrational so mixed signs never tie.
    const mpz_class r = a.u() - 2 * B;
    const int rs = sgn(r);
    const int vs = sgn(a.v());
    if (vs == 0) return rs;
    if (rs == 0) return vs;
    if (rs == vs) return rs;
    const mpz_class r2 = r * r;
    const mpz_class dv2 = a.d() * a.v() * a.v();
    // r > 0 > v: positive iff r^2 > d v^2.  r < 0 < v: positive iff d v^2 > r^2.
    return rs > 0 ? (r2 > dv2 ? 1 : -1) : (dv2 > r2 ? 1 : -1);
}

unsigned max_power_leq(const QuadraticSurd& base, const mpz_class& B) {
    if (le_integer(base, 1)) throw std::invalid_argument("max_power_leq requires base > 1");
    if (B < 1) throw std::invalid_argument("max_power_leq requires B >= 1");
    unsigned t = 0;
    QuadraticSurd next = base;
    while (le_integer(next, B)) {
        ++t;
        next = mul(next, base);
    }
    return t;
}

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& s) {
    return os << '(' << s.u() << " + " << s.v() << "*sqrt(" << s.d() << "))/2";
}

}  // namespace sixterm
