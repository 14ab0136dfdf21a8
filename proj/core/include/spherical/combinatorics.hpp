#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spherical/rational.hpp"

namespace spherical {

/// Rising factorial (a)_j = a(a+1)...(a+j-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned j);

/// Binomial coefficient, zero when k < 0 or k > n (n >= 0).
BigInt binom(long n, long k);

BigInt factorial(unsigned n);

/// Complete homogeneous symmetric polynomial h_degree(values).
Rational complete_homogeneous(std::span<const Rational> values, unsigned degree);

/// All k-subsets of {0..n-1} as bitmasks, in increasing numeric order.
std::vector<std::uint64_t> k_subsets(int n, int k);

}  // namespace spherical
