#include "spherical/closed_form.hpp"

#include <algorithm>

#include "spherical/characters.hpp"
#include "spherical/errors.hpp"
#include "spherical/invariant_calculus.hpp"

namespace spherical {

namespace {

// (n_a, n_b, n_c) with c the block outside the pair.
BlockTriple pair_frame(const BlockTriple& n, BlockPair pair) {
    return n.permuted(pair.first, pair.second, pair.third());
}

Rational e2(const BlockTriple& n) {
    return Rational(n.n1() * n.n2() + n.n1() * n.n3() + n.n2() * n.n3());
}

}  // namespace

Rational phi_identity(const BlockTriple& n, int k) { return Rational(multiplicity(n, k)); }

Rational phi_2cycle(const BlockTriple& n, int k, BlockPair pair) {
    require_two_row(n, k);
    const BlockTriple f = pair_frame(n, pair);
    const MRange range = m_range(f, k);
    if (range.empty()) return Rational(0);

    const Rational n1(f.n1()), n2(f.n2());
    const Rational lower(range.lower);
    const Rational mu(range.upper - range.lower);
    return (mu + 1) / (n1 * n2) *
           (lower * lower + n1 * n2 - (lower + mu / 2) * (n1 + n2) + (lower + mu / 3) * (mu - 1));
}

Rational phi_2cycle_eigen_sum(const BlockTriple& n, int k, BlockPair pair) {
    require_two_row(n, k);
    const BlockTriple f = pair_frame(n, pair);
    const MRange range = m_range(f, k);
    Rational sum(0);
    for (int m = range.lower; m <= range.upper; ++m) sum += g2_eigenvalue(m, f.n1(), f.n2());
    return sum;
}

Rational zeta(const ZetaXiParams& p) {
    const BlockTriple& n = p.n;
    const Rational m(p.m), k(p.k), n1(n.n1()), n2(n.n2()), n3(n.n3());
    return m * m * (3 * k - 2 * m) + m * (n3 * n3 - k * k) - (n3 - k + m) * (m * (n1 + n2 + n3) - n1 * n2);
}

Rational xi(const ZetaXiParams& p) {
    const BlockTriple& n = p.n;
    const int k = p.k;
    const int m = p.m;
    if (m == -1 || m == k - n.n3() - 1 || m == k) return Rational(0);

    const Rational mr(m), kr(k), n1(n.n1()), n2(n.n2()), n3(n.n3());
    const int denominator = n.n1() + n.n2() - 2 * m;
    if (denominator != 0)
        return (mr + 1) * (n3 - kr + mr + 1) * (kr - mr) * (n1 * n2 - mr * mr) / Rational(denominator);

    // Endpoint forms at m = m_U, where the quotient is a polynomial.
    const MRange range = m_range(n, k);
    if (!range.empty() && m == range.upper) {
        if (m == std::min(n.n1(), n.n2())) return (mr + 1) * (mr - (kr - n3) + 1) * mr * (kr - mr);
        if (m == n.n1() + n.n2() - k) return (mr + 1) * (mr - (kr - n3) + 1) * (n1 * n2 - mr * mr);
    }
    throw InvalidInput("xi evaluated where n1+n2 = 2m at an interior point (n = " + n.str() +
                       ", k = " + std::to_string(k) + ", m = " + std::to_string(m) + ")");
}

Rational phi_3cycle(const BlockTriple& n, int k) {
    require_two_row(n, k);
    const MRange range = m_range(n, k);
    if (range.empty()) return Rational(0);

    Rational sum(0);
    for (int m = range.lower; m <= range.upper; ++m) sum += zeta({n, k, m});
    sum -= xi({n, k, range.upper});
    const Rational value = sum / Rational(n.n1() * n.n2() * n.n3());

    if (phi_3cycle_display(n, k) != value)
        throw InternalError("telescoped and expanded 3-cycle forms disagree at n = " + n.str() +
                            ", k = " + std::to_string(k));
    return value;
}

Rational phi_3cycle_display(const BlockTriple& n, int k) {
    require_two_row(n, k);
    const MRange range = m_range(n, k);
    if (range.empty()) return Rational(0);

    const Rational mu(range.upper - range.lower);
    const Rational nu(range.lower);
    const Rational delta(k - range.upper);
    const Rational N(n.N());
    const Rational n1(n.n1()), n2(n.n2()), n3(n.n3());

    Rational body = N * mu * (mu - 1) / 6 + N * (mu * nu + mu * delta + 2 * nu * delta) / 2 -
                    (mu + 2 * nu) * e2(n) / 2 + n1 * n2 * n3;
    body += mu * nu * (nu - 1) / 2 + (nu - delta) * (n1 * n2 + nu * delta) - mu * delta * (delta - 1) / 2 -
            xi({n, k, range.upper}) / (mu + 1);
    return (mu + 1) / (n1 * n2 * n3) * body;
}

std::optional<Rational> phi_3cycle_small_k(const BlockTriple& n, int k) {
    require_two_row(n, k);
    const MRange range = m_range(n, k);
    if (k > n.n3() || range.empty()) return std::nullopt;

    const Rational mu(range.upper);
    const Rational kr(k), N(n.N());
    const Rational n1(n.n1()), n2(n.n2()), n3(n.n3());
    Rational body = n1 * n2 * n3 - mu * e2(n) / 2 + N * mu * (mu - 1) / 6 +
                    (kr - mu) * (mu * (N - kr + mu + 1) - 2 * n1 * n2) / 2 - xi({n, k, range.upper}) / (mu + 1);
    return (mu + 1) / (n1 * n2 * n3) * body;
}

std::optional<Rational> phi_2cycle_small_k(const BlockTriple& n, int k) {
    require_two_row(n, k);
    if (k > std::min({n.n1(), n.n2(), n.n3()})) return std::nullopt;
    const Rational kr(k), n1(n.n1()), n2(n.n2());
    return (kr + 1) / (n1 * n2) * (n1 * n2 - kr * (n1 + n2) / 2 + kr * (kr - 1) / 3);
}

std::vector<SpecialValue> special_values(const BlockTriple& n, int k, CycleKind kind) {
    require_two_row(n, k);
    const int n1 = n.n1(), n2 = n.n2(), n3 = n.n3(), N = n.N();
    const bool three = kind == CycleKind::three_cycle;
    std::vector<SpecialValue> out;

    // Multiplicity one with m_L = m_U.
    if (k == n1 + n3) out.push_back({"k=n1+n3", Rational(-1) / Rational(n2)});
    if (k == n2 + n3) out.push_back({"k=n2+n3", Rational(-1) / Rational(n1)});
    if (k == n1 + n2) out.push_back({"k=n1+n2", three ? Rational(-1) / Rational(n3) : Rational(1)});

    if (2 * k == N && std::max({n1, n2, n3}) <= N / 2) {
        const int h = N / 2;
        const Rational a(h - n1), b(h - n2), c(h - n3);
        if (three)
            out.push_back({"k=N/2", (-(a * b * c) - (a * b + a * c + b * c)) / Rational(n1 * n2 * n3)});
        else
            out.push_back({"k=N/2", (a * b - Rational(h) + Rational(n3)) / Rational(n1 * n2)});
    }

    if (three && n1 == n2 && n2 == n3) {
        const Rational nr(n1), kr(k);
        const Rational shape = nr * nr - Rational(3, 2) * nr * kr + kr * (kr - 1) / 2;
        if (k <= n1) out.push_back({"n1=n2=n3,k<=n", (kr + 1) / (nr * nr) * shape});
        if (n1 <= k && 2 * k <= 3 * n1)
            out.push_back({"n1=n2=n3,n<=k<=3n/2", (3 * nr - 2 * kr + 1) / (nr * nr) * shape});
    }
    return out;
}

std::optional<Rational> phi_special(const BlockTriple& n, int k, CycleKind kind) {
    auto values = special_values(n, k, kind);
    if (values.empty()) return std::nullopt;
    return values.front().value;
}

Rational phi_2cycle_two_factor(int n1, int n2, int k) {
    if (n1 < 1 || n2 < 1) throw InvalidInput("two-factor blocks must be positive");
    if (k < 0 || k > std::min(n1, n2)) throw InvalidInput("two-factor case needs 0 <= k <= min(n1, n2)");
    const Rational a(n1), b(n2), kr(k);
    return (a * b - (a + b) * kr + kr * kr - kr) / (a * b);
}

Rational phi_closed(const BlockTriple& n, int k, const BlockSubset& A) {
    switch (A.size()) {
        case 1: return phi_identity(n, k);
        case 2: return phi_2cycle(n, k, BlockPair(A.blocks()[0], A.blocks()[1]));
        default: return phi_3cycle(n, k);
    }
}

}  // namespace spherical
