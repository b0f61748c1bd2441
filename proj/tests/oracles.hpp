#pragma once

// Test-only reference computations. Nothing here calls into the search,
// parametric or bounds engines; values come from plain recurrences and
// nested loops.

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline std::vector<mpz_class> terms(std::int64_t A, int N) {
    std::vector<mpz_class> x{0, 1};
    for (int n = 2; n <= N; ++n) x.push_back(mpz_class(static_cast<long>(A)) * x[n - 1] - x[n - 2]);
    x.resize(static_cast<std::size_t>(N) + 1);
    return x;
}

struct Hit {
    std::int64_t A;
    std::array<int, 6> m;
    std::array<std::int64_t, 6> a;
    auto operator<=>(const Hit&) const = default;
};

/// Six nested loops: m1 > m2 >= m3 >= m4 >= m5 >= m6 >= 0 inside caps.
inline std::set<Hit> ranked_brute_force(std::int64_t A, const std::array<std::int64_t, 6>& a,
                                        const std::array<int, 6>& caps) {
    const auto x = terms(A, caps[0]);
    std::set<Hit> out;
    auto c = [&](int i) { return mpz_class(static_cast<long>(a[static_cast<std::size_t>(i)])); };
    for (int m6 = 0; m6 <= caps[5]; ++m6)
        for (int m5 = m6; m5 <= caps[4]; ++m5)
            for (int m4 = m5; m4 <= caps[3]; ++m4)
                for (int m3 = m4; m3 <= caps[2]; ++m3)
                    for (int m2 = m3; m2 <= caps[1]; ++m2)
                        for (int m1 = m2 + 1; m1 <= caps[0]; ++m1) {
                            const mpz_class s = c(0) * x[m1] + c(1) * x[m2] + c(2) * x[m3] + c(3) * x[m4] +
                                                c(4) * x[m5] + c(5) * x[m6];
                            if (s == 0) out.insert({A, {m1, m2, m3, m4, m5, m6}, a});
                        }
    return out;
}

/// Solutions (n1..n6) of C1 x_{n1} + C2 x_{n2} + C3 x_{n3} = C4 x_{n4} + C5 x_{n5} + C6 x_{n6}
/// with n1 > n2 > n3 >= 0, n4 > n5 > n6 >= 0, C1 x_{n1} != C4 x_{n4}, all n <= N.
inline std::set<std::array<int, 6>> two_sided_brute_force(std::int64_t A, const std::array<std::int64_t, 6>& C,
                                                           int N) {
    const auto x = terms(A, N);
    std::set<std::array<int, 6>> out;
    auto c = [&](int i) { return mpz_class(static_cast<long>(C[static_cast<std::size_t>(i)])); };
    for (int n1 = 0; n1 <= N; ++n1)
        for (int n2 = 0; n2 < n1; ++n2)
            for (int n3 = 0; n3 < n2; ++n3)
                for (int n4 = 0; n4 <= N; ++n4)
                    for (int n5 = 0; n5 < n4; ++n5)
                        for (int n6 = 0; n6 < n5; ++n6) {
                            if (c(0) * x[n1] == c(3) * x[n4]) continue;
                            if (c(0) * x[n1] + c(1) * x[n2] + c(2) * x[n3] == c(3) * x[n4] + c(4) * x[n5] + c(5) * x[n6])
                                out.insert({n1, n2, n3, n4, n5, n6});
                        }
    return out;
}

/// sum_q a_q x_{t + e_q} for t = 0 and t = 1 both vanish.
inline bool two_shifts_vanish(std::int64_t A, const std::vector<std::pair<unsigned, std::int64_t>>& terms_in) {
    unsigned top = 0;
    for (const auto& [e, a] : terms_in) top = std::max(top, e);
    const auto x = terms(A, static_cast<int>(top) + 2);
    for (int t = 0; t <= 1; ++t) {
        mpz_class s = 0;
        for (const auto& [e, a] : terms_in) s += mpz_class(static_cast<long>(a)) * x[t + static_cast<int>(e)];
        if (s != 0) return false;
    }
    return true;
}

}  // namespace oracle
