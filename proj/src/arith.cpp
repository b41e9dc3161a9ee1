#include "magnetic/arith.hpp"

#include "magnetic/errors.hpp"

#include <cmath>

namespace magnetic::arith {

std::vector<Integer> divisor_sigma_table(unsigned k, long n_max) {
    std::vector<Integer> sigma(n_max + 1, 0);
    Integer dk;
    for (long d = 1; d <= n_max; ++d) {
        mpz_ui_pow_ui(dk.get_mpz_t(), d, k);
        for (long m = d; m <= n_max; m += d) sigma[m] += dk;
    }
    return sigma;
}

std::vector<int> mobius_table(long n_max) {
    std::vector<int> mu(n_max + 1, 1);
    std::vector<bool> composite(n_max + 1, false);
    if (n_max >= 0) mu[0] = 0;
    for (long p = 2; p <= n_max; ++p) {
        if (composite[p]) continue;
        for (long m = p; m <= n_max; m += p) {
            if (m > p) composite[m] = true;
            mu[m] = -mu[m];
        }
        if (p <= n_max / p)
            for (long m = p * p; m <= n_max; m += p * p) mu[m] = 0;
    }
    return mu;
}

int mobius(long n) {
    if (n < 1) throw UsageError("mobius of non-positive argument");
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    for (long p = 2; p <= n; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

std::vector<long> divisors(long n) {
    if (n < 1) throw UsageError("divisors of non-positive argument");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

int legendre(long a, long p) {
    Integer aa = a, pp = p;
    return mpz_legendre(aa.get_mpz_t(), pp.get_mpz_t());
}

int kronecker_prime(long a, long p) {
    if (p == 2) {
        if (a % 2 == 0) return 0;
        long r = ((a % 8) + 8) % 8;
        return (r == 1 || r == 7) ? 1 : -1;
    }
    if (!is_prime(p)) throw UsageError("kronecker_prime needs a prime");
    return legendre(a, p);
}

int character(long disc, long d) {
    if (disc == 1) return 1;
    if (disc == -3) {
        long r = ((d % 3) + 3) % 3;
        return r == 0 ? 0 : (r == 1 ? 1 : -1);
    }
    throw UsageError("unsupported discriminant " + std::to_string(disc));
}

long isqrt(long n) {
    if (n < 0) throw DomainError("isqrt of negative");
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_square(long n) { return n >= 0 && isqrt(n) * isqrt(n) == n; }

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace magnetic::arith
