#pragma once

#include <cstddef>

#include "spherical/blocks.hpp"
#include "spherical/partition.hpp"
#include "spherical/rational.hpp"

namespace spherical {

/// Irreducible character chi^lambda at the class of cycle type mu, by the
/// Murnaghan-Nakayama rule. Results are memoized process-wide on
/// (lambda, mu); the cache is safe for concurrent use.
///
/// Throws InvalidInput when |lambda| != |mu|.
BigInt mn_character(const Partition& lambda, const Partition& mu);

/// Number of entries currently memoized by mn_character.
std::size_t mn_cache_size();

/// binom(N,k) - binom(N,k-1), the degree of [N-k, k]. Requires 0 <= 2k <= N.
BigInt dim_two_row(int N, int k);

/// Index range m_L <= m <= m_U of the invariant basis; may be empty.
struct MRange {
    int lower;
    int upper;

    bool empty() const { return lower > upper; }
    int count() const { return empty() ? 0 : upper - lower + 1; }
};

/// m_L = max(0, k-n3), m_U = min(n1, n2, k, n1+n2-k).
MRange m_range(const BlockTriple& n, int k);

/// Multiplicity of [N-k, k] in the permutation module induced from G_n
/// (equivalently the dimension of G_n-invariants in [N-k, k]). Zero on an
/// empty m-range.
int multiplicity(const BlockTriple& n, int k);

/// Validates 0 <= k and 2k <= N for the triple.
void require_two_row(const BlockTriple& n, int k);

}  // namespace spherical
