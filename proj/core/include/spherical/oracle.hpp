#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "spherical/blocks.hpp"
#include "spherical/coeff_table.hpp"
#include "spherical/permutation.hpp"
#include "spherical/rational.hpp"

namespace spherical {

/// Size bounds for brute-force enumeration. Exceeding one raises
/// ResourceLimitExceeded; nothing is ever truncated.
struct OracleLimits {
    std::uint64_t max_group_order = 1'000'000;
    std::uint64_t max_subsets = 20'000;
};

/// (1/#G) sum_{h in G} chi^[N-k,k](g h), G the Young subgroup of the given
/// composition. Plain enumeration of G with memoized characters.
Rational phi_character_oracle(const std::vector<int>& composition, int k, const Permutation& g,
                              const OracleLimits& limits = {});

Rational phi_character_oracle(const BlockTriple& n, int k, const Permutation& g, const OracleLimits& limits = {});

/// The k-subsets of {0..N-1} (bitmasks, increasing) with a reverse index.
class SubsetSpace {
public:
    SubsetSpace(int N, int k);

    int N() const { return N_; }
    int k() const { return k_; }
    std::size_t size() const { return subsets_.size(); }
    const std::vector<std::uint64_t>& subsets() const { return subsets_; }
    std::size_t index_of(std::uint64_t subset) const;

private:
    int N_;
    int k_;
    std::vector<std::uint64_t> subsets_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// p = sum_E coords[E] m_E over squarefree monomials m_E = prod_{i in E} x_i.
struct VkVector {
    std::shared_ptr<const SubsetSpace> space;
    std::vector<Rational> coords;

    Rational at(std::uint64_t subset) const { return coords[space->index_of(subset)]; }

    /// For every (k-1)-subset F: sum_{i not in F} coords[F + i] == 0, i.e.
    /// sum_i d/dx_i p == 0.
    bool satisfies_divergence() const;
};

/// Basis of V_k (null space of the divergence conditions); its size is
/// binom(N,k) - binom(N,k-1).
std::vector<VkVector> build_Vk_basis(int N, int k, const OracleLimits& limits = {});

/// Basis of the G_n-invariant vectors of V_k. Invariants are constant on the
/// orbits of k-subsets, which are labelled by block occupations (u, v, w);
/// the divergence system is assembled literally over all (k-1)-subsets.
std::vector<VkVector> invariants_in_Vk(const BlockTriple& n, int k, const OracleLimits& limits = {});

/// g . p where (g p)(x) = p(x g), so g . m_E = m_{g(E)}.
VkVector act(const Permutation& g, const VkVector& v);

/// Average of the coordinates over each G_n-orbit of subsets.
VkVector project_invariant(const BlockTriple& n, const VkVector& v);

/// The (u, v) table of an orbit-constant vector.
CoeffTable to_coeff_table(const BlockTriple& n, const VkVector& v);

/// Trace of B(g), where rho g xi_i = sum_j B_ji xi_j over the invariant basis.
Rational phi_module_oracle(const BlockTriple& n, int k, const Permutation& g, const OracleLimits& limits = {});

}  // namespace spherical
