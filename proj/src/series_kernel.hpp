#pragma once

#include "magnetic/rational.hpp"

#include <span>
#include <vector>

namespace magnetic::detail {

// Truncated product of integer polynomials: first n_out coefficients.
std::vector<Integer> poly_mul(std::span<const Integer> a, std::span<const Integer> b,
                              std::size_t n_out);

// First n coefficients of 1/a, where a[0] == 1.
std::vector<Integer> poly_inv_unit(std::span<const Integer> a, std::size_t n);

// Forced strategies, exposed for tests.
std::vector<Integer> poly_mul_schoolbook(std::span<const Integer> a, std::span<const Integer> b,
                                         std::size_t n_out);
std::vector<Integer> poly_mul_kronecker(std::span<const Integer> a, std::span<const Integer> b,
                                        std::size_t n_out);

// Integers over a common positive denominator.
struct ScaledVector {
    std::vector<Integer> num;
    Integer den;
};

ScaledVector to_scaled(std::span<const Rational> values);
std::vector<Rational> from_scaled(std::vector<Integer>&& num, const Integer& den);

}  // namespace magnetic::detail
