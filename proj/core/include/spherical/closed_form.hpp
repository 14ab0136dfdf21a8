#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spherical/blocks.hpp"
#include "spherical/rational.hpp"

namespace spherical {

// Spherical function values Phi^[N-k,k](g) for the Young subgroup G_n at
// cycles with at most one point per block. All functions require 2k <= N and
// return 0 when the invariant space is trivial (empty m-range).

/// Phi at the identity: the multiplicity of [N-k,k].
Rational phi_identity(const BlockTriple& n, int k);

/// Phi at the transposition of the first points of blocks pair.first and
/// pair.second.
Rational phi_2cycle(const BlockTriple& n, int k, BlockPair pair);

/// Same value as phi_2cycle, summed directly from the per-m eigenvalues.
Rational phi_2cycle_eigen_sum(const BlockTriple& n, int k, BlockPair pair);

struct ZetaXiParams {
    BlockTriple n;
    int k;
    int m;
};

/// zeta(k,m) = m^2(3k-2m) + m(n3^2-k^2) - (n3-k+m)(m(n1+n2+n3) - n1 n2).
Rational zeta(const ZetaXiParams& p);

/// xi(k,m) = (m+1)(n3-k+m+1)(k-m)(n1 n2 - m^2)/(n1+n2-2m), with the
/// conventions xi(k,-1) = xi(k,k-n3-1) = xi(k,k) = 0. At m = m_U with
/// n1+n2 = 2m the polynomial endpoint form is used; any other evaluation with
/// a vanishing denominator throws InvalidInput.
Rational xi(const ZetaXiParams& p);

/// Phi at the 3-cycle through the first points of blocks 1, 2, 3, in the
/// telescoped form (1/(n1 n2 n3)) [sum_m zeta(k,m) - xi(k,m_U)]. The value is
/// cross-checked against phi_3cycle_display; a mismatch throws InternalError.
Rational phi_3cycle(const BlockTriple& n, int k);

/// The same value from the expanded display in mu = m_U-m_L, nu = m_L,
/// delta = k-m_U (with e2 = n1n2 + n1n3 + n2n3).
Rational phi_3cycle_display(const BlockTriple& n, int k);

/// Shortened display valid for k <= n3 (m_L = 0).
std::optional<Rational> phi_3cycle_small_k(const BlockTriple& n, int k);

/// Shortened 2-cycle display valid for k <= min(n1, n2, n3).
std::optional<Rational> phi_2cycle_small_k(const BlockTriple& n, int k);

enum class CycleKind { transposition, three_cycle };

/// A closed-form value known for a special parameter pattern.
struct SpecialValue {
    std::string pattern;  // e.g. "k=n1+n3", "k=N/2", "n1=n2=n3,k<=n"
    Rational value;
};

/// Every special pattern that applies to (n, k). For transpositions the
/// cycle is the one on blocks 1 and 2.
std::vector<SpecialValue> special_values(const BlockTriple& n, int k, CycleKind kind);

/// First entry of special_values, if any.
std::optional<Rational> phi_special(const BlockTriple& n, int k, CycleKind kind);

/// Two-block Young subgroup S_{n1} x S_{n2}: Phi at the transposition of
/// the first points of the two blocks. Requires 0 <= k <= min(n1, n2).
Rational phi_2cycle_two_factor(int n1, int n2, int k);

/// Dispatch on |A|: identity, transposition or 3-cycle.
Rational phi_closed(const BlockTriple& n, int k, const BlockSubset& A);

}  // namespace spherical
