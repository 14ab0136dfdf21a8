#pragma once

#include <map>

#include "spherical/blocks.hpp"
#include "spherical/coeff_table.hpp"
#include "spherical/rational.hpp"

namespace spherical {

/// True iff the invariant represented by f is annihilated by sum_i d/dx_i,
/// i.e. for all 0<=u<=n1, 0<=v<=n2 with u+v <= k-1
///   (u-n1) f(u+1,v) + (v-n2) f(u,v+1) - (n3-k+1+u+v) f(u,v) = 0
/// with f taken as zero off the admissible grid.
bool check_difference_equation(const CoeffTable& f);

/// Table of rho(g2 psi_f) where g2 transposes the first points of blocks
/// pair.first and pair.second, and rho averages over G_n.
CoeffTable apply_rho_g2(const CoeffTable& f, BlockPair pair);

/// ((m-n1)(m-n2) - m) / (n1 n2).
Rational g2_eigenvalue(int m, int n1, int n2);

/// Table of rho(g3 psi_f) for the 3-cycle through the first points of
/// blocks 1, 2, 3.
CoeffTable apply_rho_g3(const CoeffTable& f);

/// Coefficient c_m of psi_m in f = sum_n c_n psi_n, read off from the u-axis:
///   c_m = [f(m,0) - m(k-m-n3)/(n1+n2-2m+2) f(m-1,0)] / psi_m(m,0).
/// Requires f(u,0) = 0 for all u < m-1 (checked).
Rational extract_leading_coeff(const CoeffTable& f, int m);

/// f = sum_n coefficients[n] psi_n with n ranging over m_range.
struct InvariantExpansion {
    std::map<int, Rational> coefficients;

    Rational coefficient(int m) const;
};

/// Exact expansion of f in the unnormalized Hahn basis. Throws InvalidInput
/// if f fails the difference equation and InternalError if the resulting
/// linear system is inconsistent.
InvariantExpansion expand_in_psi_basis(const CoeffTable& f);

}  // namespace spherical
