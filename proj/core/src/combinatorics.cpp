#include "spherical/combinatorics.hpp"

#include "spherical/errors.hpp"

namespace spherical {

Rational pochhammer(const Rational& a, unsigned j) {
    Rational result(1);
    Rational factor = a;
    for (unsigned i = 0; i < j; ++i) {
        if (factor.is_zero()) return Rational(0);
        result *= factor;
        factor += 1;
    }
    return result;
}

BigInt binom(long n, long k) {
    if (n < 0) throw InvalidInput("binom: negative n");
    if (k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(unsigned n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Rational complete_homogeneous(std::span<const Rational> values, unsigned degree) {
    // h[d] over a growing prefix of variables: h_d(c_1..c_j) = h_d(c_1..c_{j-1}) + c_j h_{d-1}(c_1..c_j).
    std::vector<Rational> h(degree + 1, Rational(0));
    h[0] = 1;
    for (const Rational& c : values)
        for (unsigned d = 1; d <= degree; ++d) h[d] += c * h[d - 1];
    return h[degree];
}

std::vector<std::uint64_t> k_subsets(int n, int k) {
    if (n < 0 || n > 62) throw InvalidInput("k_subsets: n must lie in [0, 62]");
    std::vector<std::uint64_t> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    while (s < limit) {
        out.push_back(s);
        // Gosper's hack: next integer with the same popcount.
        std::uint64_t c = s & (~s + 1);
        std::uint64_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return out;
}

}  // namespace spherical
