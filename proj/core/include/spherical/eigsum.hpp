#pragma once

#include <array>
#include <span>
#include <vector>

#include "spherical/blocks.hpp"
#include "spherical/rational.hpp"

namespace spherical {

/// Degrees d1 > d2 > d3 >= 0 of the monomial (d1^n1, d2^n2, d3^n3) and the
/// coupling kappa.
class DegreeTriple {
public:
    DegreeTriple(int d1, int d2, int d3, Rational kappa);

    int d1() const { return d_[0]; }
    int d2() const { return d_[1]; }
    int d3() const { return d_[2]; }
    int degree(int j) const { return d_[static_cast<std::size_t>(j - 1)]; }
    const Rational& kappa() const { return kappa_; }

    DegreeTriple with_kappa(Rational kappa) const { return DegreeTriple(d1(), d2(), d3(), std::move(kappa)); }

private:
    std::array<int, 3> d_;
    Rational kappa_;
};

struct ShiftedDegrees {
    Rational dt1;  // d1 + kappa (n2 + n3)
    Rational dt2;  // d2 + kappa n3
    Rational dt3;  // d3

    const Rational& operator[](int j) const { return j == 1 ? dt1 : j == 2 ? dt2 : dt3; }
};

ShiftedDegrees shifted_degrees(const DegreeTriple& d, const BlockTriple& n);

/// h_m of the shifted degrees selected by A.
Rational h_subset(const ShiftedDegrees& sd, const BlockSubset& A, unsigned m);

/// Sum of the eigenvalues of the order-p Heckman-Polychronakos operator over
/// the [N-k,k] isotypic part of the monomial module:
///   dim [N-k,k] * sum_{l=1}^{min(p+1,3)} (-kappa)^{l-1}
///       sum_{|A|=l} Phi(g_A) h_{p+1-l}^A prod_{i in A} n_i!
/// Requires p >= 1 and 2k <= N.
Rational eigenvalue_sum(const BlockTriple& n, const DegreeTriple& d, int k, int p);

/// Coefficients (constant term first) of eigenvalue_sum as a polynomial in
/// kappa, recovered by exact interpolation at p+3 nodes. Throws
/// InternalError if the interpolant has degree above p+1.
std::vector<Rational> eigenvalue_sum_in_kappa(const BlockTriple& n, const DegreeTriple& d, int k, int p);

/// Newton interpolation through (xs[i], ys[i]); distinct nodes required.
std::vector<Rational> interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// At kappa = 0 every monomial of the module is an eigenfunction with
/// eigenvalue sum_j n_j d_j^p, which predicts
///   multiplicity * dim [N-k,k] * sum_j n_j d_j^p.
/// The diagnostic reports that prediction next to the formula's value.
struct KappaZeroDiagnostic {
    Rational formula;
    Rational monomial_prediction;
    bool agree;
};

KappaZeroDiagnostic kappa_zero_diagnostic(const BlockTriple& n, const DegreeTriple& d, int k, int p);

}  // namespace spherical
