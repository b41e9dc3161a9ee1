#pragma once

#include "magnetic/rational.hpp"

#include <vector>

namespace magnetic::arith {

// sigma_k(n) for 0 <= n <= n_max, entry 0 unused (zero).
std::vector<Integer> divisor_sigma_table(unsigned k, long n_max);

// mu(n) for 0 <= n <= n_max, entry 0 unused.
std::vector<int> mobius_table(long n_max);
int mobius(long n);

bool is_prime(long n);
std::vector<long> primes_up_to(long n);
std::vector<long> divisors(long n);

// Legendre symbol (a/p) for an odd prime p.
int legendre(long a, long p);

// Kronecker symbol (a/p) for a prime p; (a/2) is 0 for even a,
// 1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
int kronecker_prime(long a, long p);

// The quadratic character attached to discriminant D in {1, -3}.
int character(long disc, long d);

long isqrt(long n);
bool is_square(long n);

long floor_div(long a, long b);
long ceil_div(long a, long b);

}  // namespace magnetic::arith
