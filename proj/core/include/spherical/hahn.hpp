#pragma once

#include <vector>

#include "spherical/blocks.hpp"
#include "spherical/coeff_table.hpp"
#include "spherical/rational.hpp"

namespace spherical {

/// E_m(alpha, beta, gamma, t) =
///   sum_{i=0}^{m} (-1)^i C(m,i) (beta-m+1)_i (alpha-m+1)_{m-i} (-t)_i (t-gamma)_{m-i}.
Rational hahn_E(unsigned m, const Rational& alpha, const Rational& beta, const Rational& gamma,
                const Rational& t);

/// Parameters (n, k, m) of one invariant basis element. Construction checks
/// 2k <= N and m_L <= m <= m_U.
class HahnContext {
public:
    HahnContext(const BlockTriple& n, int k, int m);

    const BlockTriple& blocks() const { return n_; }
    int k() const { return k_; }
    int m() const { return m_; }

private:
    BlockTriple n_;
    int k_;
    int m_;
};

/// First factor E_{k-m}(n3, n1+n2-2m, k-m, k-t), a function of t = u+v.
Rational psi1(const HahnContext& ctx, const Rational& t);

/// Second factor E_m(n2, n1, u+v, v). Vanishes whenever u+v < m.
Rational psi2(const HahnContext& ctx, int u, int v);

/// Unnormalized basis table f(u,v) = psi1(u+v) psi2(u,v) on the admissible grid.
CoeffTable psi_table(const HahnContext& ctx);

/// psi_table for every m in m_range(n, k), ascending in m; empty when the
/// range is empty.
std::vector<CoeffTable> psi_basis(const BlockTriple& n, int k);

}  // namespace spherical
