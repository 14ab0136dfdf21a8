#include "spherical/eigsum.hpp"

#include <algorithm>

#include "spherical/characters.hpp"
#include "spherical/closed_form.hpp"
#include "spherical/combinatorics.hpp"
#include "spherical/errors.hpp"

namespace spherical {

DegreeTriple::DegreeTriple(int d1, int d2, int d3, Rational kappa) : d_{d1, d2, d3}, kappa_(std::move(kappa)) {
    if (!(d1 > d2 && d2 > d3 && d3 >= 0))
        throw InvalidInput("degrees must satisfy d1 > d2 > d3 >= 0, got (" + std::to_string(d1) + "," +
                           std::to_string(d2) + "," + std::to_string(d3) + ")");
}

ShiftedDegrees shifted_degrees(const DegreeTriple& d, const BlockTriple& n) {
    return {Rational(d.d1()) + d.kappa() * Rational(n.n2() + n.n3()), Rational(d.d2()) + d.kappa() * Rational(n.n3()),
            Rational(d.d3())};
}

Rational h_subset(const ShiftedDegrees& sd, const BlockSubset& A, unsigned m) {
    std::vector<Rational> values;
    for (int a : A.blocks()) values.push_back(sd[a]);
    return complete_homogeneous(values, m);
}

Rational eigenvalue_sum(const BlockTriple& n, const DegreeTriple& d, int k, int p) {
    if (p < 1) throw InvalidInput("operator order p must be at least 1");
    require_two_row(n, k);

    const ShiftedDegrees sd = shifted_degrees(d, n);
    const auto max_length = static_cast<std::size_t>(std::min(p + 1, 3));
    Rational total(0);
    Rational kappa_power(1);  // (-kappa)^{l-1}
    for (std::size_t length = 1; length <= max_length; ++length) {
        Rational inner(0);
        for (const BlockSubset& A : all_block_subsets()) {
            if (A.size() != length) continue;
            BigInt weight = 1;
            for (int a : A.blocks()) weight *= factorial(static_cast<unsigned>(n.block(a)));
            inner += phi_closed(n, k, A) * h_subset(sd, A, static_cast<unsigned>(p + 1) - length) * Rational(weight);
        }
        total += kappa_power * inner;
        kappa_power *= -d.kappa();
    }
    return Rational(dim_two_row(n.N(), k)) * total;
}

std::vector<Rational> interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
    if (xs.size() != ys.size() || xs.empty()) throw InvalidInput("interpolate: need matching, nonempty nodes");
    const std::size_t n = xs.size();

    // Divided differences, then expand the Newton form into monomial coefficients.
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            const Rational gap = xs[i] - xs[i - level];
            if (gap.is_zero()) throw InvalidInput("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / gap;
        }

    std::vector<Rational> coeffs(n);
    for (std::size_t i = n; i-- > 0;) {
        // coeffs <- coeffs * (x - xs[i]) + dd[i]
        for (std::size_t j = n - 1; j >= 1; --j) coeffs[j] = coeffs[j - 1] - xs[i] * coeffs[j];
        coeffs[0] = dd[i] - xs[i] * coeffs[0];
    }
    return coeffs;
}

std::vector<Rational> eigenvalue_sum_in_kappa(const BlockTriple& n, const DegreeTriple& d, int k, int p) {
    std::vector<Rational> xs, ys;
    for (int i = 0; i < p + 3; ++i) {
        xs.emplace_back(i);
        ys.push_back(eigenvalue_sum(n, d.with_kappa(Rational(i)), k, p));
    }
    std::vector<Rational> coeffs = interpolate(xs, ys);
    for (std::size_t j = static_cast<std::size_t>(p) + 2; j < coeffs.size(); ++j)
        if (!coeffs[j].is_zero()) throw InternalError("eigenvalue sum has degree above p+1 in kappa");
    coeffs.resize(static_cast<std::size_t>(p) + 2);
    return coeffs;
}

KappaZeroDiagnostic kappa_zero_diagnostic(const BlockTriple& n, const DegreeTriple& d, int k, int p) {
    const Rational formula = eigenvalue_sum(n, d.with_kappa(Rational(0)), k, p);
    Rational eigenvalue(0);
    for (int j = 1; j <= 3; ++j) eigenvalue += Rational(n.block(j)) * pow(Rational(d.degree(j)), static_cast<unsigned>(p));
    const Rational prediction = Rational(multiplicity(n, k)) * Rational(dim_two_row(n.N(), k)) * eigenvalue;
    return {formula, prediction, formula == prediction};
}

}  // namespace spherical
