#include "spherical/hahn.hpp"

#include "spherical/characters.hpp"
#include "spherical/combinatorics.hpp"
#include "spherical/errors.hpp"

namespace spherical {

Rational hahn_E(unsigned m, const Rational& alpha, const Rational& beta, const Rational& gamma,
                const Rational& t) {
    const Rational mr(m);
    Rational sum(0);
    for (unsigned i = 0; i <= m; ++i) {
        Rational term = Rational(binom(m, i));
        if (i % 2) term = -term;
        term *= pochhammer(beta - mr + 1, i);
        if (term.is_zero()) continue;
        term *= pochhammer(alpha - mr + 1, m - i);
        if (term.is_zero()) continue;
        term *= pochhammer(-t, i);
        if (term.is_zero()) continue;
        term *= pochhammer(t - gamma, m - i);
        sum += term;
    }
    return sum;
}

HahnContext::HahnContext(const BlockTriple& n, int k, int m) : n_(n), k_(k), m_(m) {
    require_two_row(n, k);
    const MRange range = m_range(n, k);
    if (m < range.lower || m > range.upper)
        throw InvalidInput("basis index m = " + std::to_string(m) + " outside [" + std::to_string(range.lower) +
                           ", " + std::to_string(range.upper) + "] for n = " + n.str() +
                           ", k = " + std::to_string(k));
}

Rational psi1(const HahnContext& ctx, const Rational& t) {
    const BlockTriple& n = ctx.blocks();
    const int k = ctx.k();
    const int m = ctx.m();
    return hahn_E(static_cast<unsigned>(k - m), Rational(n.n3()), Rational(n.n1() + n.n2() - 2 * m),
                  Rational(k - m), Rational(k) - t);
}

Rational psi2(const HahnContext& ctx, int u, int v) {
    const BlockTriple& n = ctx.blocks();
    return hahn_E(static_cast<unsigned>(ctx.m()), Rational(n.n2()), Rational(n.n1()), Rational(u + v),
                  Rational(v));
}

CoeffTable psi_table(const HahnContext& ctx) {
    CoeffTable table(ctx.blocks(), ctx.k());
    for (auto [u, v] : table.grid()) {
        Rational second = psi2(ctx, u, v);
        if (second.is_zero()) continue;
        table.set(u, v, psi1(ctx, Rational(u + v)) * second);
    }
    return table;
}

std::vector<CoeffTable> psi_basis(const BlockTriple& n, int k) {
    require_two_row(n, k);
    std::vector<CoeffTable> out;
    const MRange range = m_range(n, k);
    for (int m = range.lower; m <= range.upper; ++m) out.push_back(psi_table(HahnContext(n, k, m)));
    return out;
}

}  // namespace spherical
