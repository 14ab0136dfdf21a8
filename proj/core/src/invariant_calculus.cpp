#include "spherical/invariant_calculus.hpp"

#include <array>
#include <vector>

#include "spherical/characters.hpp"
#include "spherical/errors.hpp"
#include "spherical/hahn.hpp"
#include "spherical/linalg.hpp"

namespace spherical {

bool check_difference_equation(const CoeffTable& f) {
    const BlockTriple& n = f.blocks();
    const int k = f.k();
    for (int u = 0; u <= n.n1(); ++u) {
        for (int v = 0; v <= n.n2() && u + v <= k - 1; ++v) {
            Rational lhs = Rational(u - n.n1()) * f.at(u + 1, v) + Rational(v - n.n2()) * f.at(u, v + 1) -
                           Rational(n.n3() - k + 1 + u + v) * f.at(u, v);
            if (!lhs.is_zero()) return false;
        }
    }
    return true;
}

CoeffTable apply_rho_g2(const CoeffTable& f, BlockPair pair) {
    const BlockTriple& n = f.blocks();
    const int a = pair.first - 1;
    const int b = pair.second - 1;
    const Rational na(n.block(pair.first));
    const Rational nb(n.block(pair.second));

    auto read = [&](std::array<int, 3> occ) { return f.at_occupation(occ[0], occ[1], occ[2]); };

    CoeffTable out(n, f.k());
    for (auto [u, v] : f.grid()) {
        const std::array<int, 3> occ{u, v, f.k() - u - v};
        const Rational oa(occ[static_cast<std::size_t>(a)]);
        const Rational ob(occ[static_cast<std::size_t>(b)]);

        std::array<int, 3> a_to_b = occ;  // one fewer in block a, one more in block b
        --a_to_b[static_cast<std::size_t>(a)];
        ++a_to_b[static_cast<std::size_t>(b)];
        std::array<int, 3> b_to_a = occ;
        ++b_to_a[static_cast<std::size_t>(a)];
        --b_to_a[static_cast<std::size_t>(b)];

        Rational value = ((na - oa) * (nb - ob) + oa * ob) * read(occ) + oa * (nb - ob) * read(a_to_b) +
                         (na - oa) * ob * read(b_to_a);
        out.set(u, v, value / (na * nb));
    }
    return out;
}

Rational g2_eigenvalue(int m, int n1, int n2) {
    return Rational((m - n1) * (m - n2) - m) / Rational(n1 * n2);
}

CoeffTable apply_rho_g3(const CoeffTable& f) {
    const BlockTriple& n = f.blocks();
    const Rational n1(n.n1()), n2(n.n2()), n3(n.n3());
    const Rational scale = Rational(1) / (n1 * n2 * n3);

    CoeffTable out(n, f.k());
    for (auto [ui, vi] : f.grid()) {
        const Rational u(ui), v(vi), w(f.k() - ui - vi);
        Rational value = u * v * w * f.at(ui, vi);
        value += (n1 - u) * v * w * f.at(ui + 1, vi);
        value += u * v * (n3 - w) * f.at(ui, vi - 1);
        value += (n1 - u) * v * (n3 - w) * f.at(ui + 1, vi - 1);
        value += u * (n2 - v) * w * f.at(ui - 1, vi + 1);
        value += (n1 - u) * (n2 - v) * w * f.at(ui, vi + 1);
        value += u * (n2 - v) * (n3 - w) * f.at(ui - 1, vi);
        value += (n1 - u) * (n2 - v) * (n3 - w) * f.at(ui, vi);
        out.set(ui, vi, value * scale);
    }
    return out;
}

Rational extract_leading_coeff(const CoeffTable& f, int m) {
    const HahnContext ctx(f.blocks(), f.k(), m);
    const BlockTriple& n = f.blocks();
    const int k = f.k();

    for (int u = 0; u < m - 1; ++u)
        if (!f.at(u, 0).is_zero())
            throw InvalidInput("extract_leading_coeff: f(" + std::to_string(u) + ",0) must vanish below m-1");

    const Rational pivot = psi1(ctx, Rational(m)) * psi2(ctx, m, 0);
    if (pivot.is_zero()) throw InternalError("psi_m(m,0) vanishes for n = " + n.str() + ", k = " + std::to_string(k));

    const Rational ratio = Rational(m * (k - m - n.n3())) / Rational(n.n1() + n.n2() - 2 * m + 2);
    return (f.at(m, 0) - ratio * f.at(m - 1, 0)) / pivot;
}

Rational InvariantExpansion::coefficient(int m) const {
    auto it = coefficients.find(m);
    return it == coefficients.end() ? Rational(0) : it->second;
}

InvariantExpansion expand_in_psi_basis(const CoeffTable& f) {
    if (!check_difference_equation(f))
        throw InvalidInput("expand_in_psi_basis: table does not represent an element of V_k");

    const MRange range = m_range(f.blocks(), f.k());
    InvariantExpansion out;
    if (range.empty()) {
        if (!f.is_zero()) throw InternalError("nonzero invariant in V_k although the multiplicity is zero");
        return out;
    }

    std::vector<std::vector<Rational>> columns;
    for (const CoeffTable& t : psi_basis(f.blocks(), f.k())) columns.push_back(t.values());
    const std::vector<Rational> rhs = f.values();
    const auto solution = solve_exact(RationalMatrix::from_columns(columns, rhs.size()), rhs);
    if (!solution) throw InternalError("invariant not in the span of the Hahn basis for n = " + f.blocks().str());

    for (int m = range.lower; m <= range.upper; ++m)
        out.coefficients.emplace(m, (*solution)[static_cast<std::size_t>(m - range.lower)]);
    return out;
}

}  // namespace spherical
