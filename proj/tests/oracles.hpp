#pragma once

// Slow, direct constructions used to cross-check the library.

#include "magnetic/qseries.hpp"

#include <random>
#include <vector>

namespace oracle {

using magnetic::Integer;
using magnetic::QSeries;
using magnetic::Rational;

inline Integer sigma(long k, long n) {
    Integer s = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) {
            Integer t;
            mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
            s += t;
        }
    return s;
}

// Coefficients of E_k for k in {2, 4, 6}, exponents 0..n.
inline std::vector<Rational> eisenstein(int k, long n) {
    long c = k == 2 ? -24 : (k == 4 ? 240 : -504);
    std::vector<Rational> a(n + 1, Rational(0));
    a[0] = 1;
    for (long m = 1; m <= n; ++m) a[m] = Rational(c * sigma(k - 1, m));
    return a;
}

// Schoolbook product of dense coefficient lists starting at exponent 0.
inline std::vector<Rational> mul(const std::vector<Rational>& a, const std::vector<Rational>& b, long n) {
    std::vector<Rational> c(n + 1, Rational(0));
    for (long i = 0; i <= n && i < static_cast<long>(a.size()); ++i)
        for (long j = 0; i + j <= n && j < static_cast<long>(b.size()); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// 1/a for a[0] != 0 by the defining recursion.
inline std::vector<Rational> inv(const std::vector<Rational>& a, long n) {
    std::vector<Rational> b(n + 1, Rational(0));
    b[0] = 1 / a[0];
    for (long m = 1; m <= n; ++m) {
        Rational s = 0;
        for (long i = 1; i <= m && i < static_cast<long>(a.size()); ++i) s += a[i] * b[m - i];
        b[m] = -s / a[0];
    }
    return b;
}

// Delta coefficients at exponents 1..n+1 as prod (1 - q^m)^24, shifted to start at index 0.
inline std::vector<Rational> delta_over_q(long n) {
    std::vector<Rational> p(n + 1, Rational(0));
    p[0] = 1;
    for (long m = 1; m <= n; ++m)
        for (int r = 0; r < 24; ++r)
            for (long i = n; i >= m; --i) p[i] -= p[i - m];
    return p;
}

inline QSeries random_series(std::mt19937& rng, long lead, long prec, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::vector<Rational> c;
    for (long n = lead; n <= prec; ++n) c.emplace_back(dist(rng));
    return QSeries(lead, std::move(c));
}

}  // namespace oracle
