#include "spherical/oracle.hpp"

#include <array>
#include <bit>
#include <map>

#include "spherical/characters.hpp"
#include "spherical/combinatorics.hpp"
#include "spherical/errors.hpp"
#include "spherical/linalg.hpp"
#include "spherical/young_subgroup.hpp"

namespace spherical {

namespace {

void check_subset_bound(int N, int k, const OracleLimits& limits) {
    const BigInt count = binom(N, k);
    if (count > BigInt(static_cast<unsigned long>(limits.max_subsets)))
        throw ResourceLimitExceeded("too many " + std::to_string(k) + "-subsets of " + std::to_string(N),
                                    count.fits_ulong_p() ? count.get_ui() : ~std::uint64_t{0}, limits.max_subsets);
}

std::uint64_t block_mask(const BlockTriple& n, int j) {
    const int start = n.start(j);
    const int width = n.block(j);
    return ((std::uint64_t{1} << width) - 1) << start;
}

// Block occupation (u, v, w) of a subset.
std::array<int, 3> occupation(const BlockTriple& n, std::uint64_t subset) {
    return {std::popcount(subset & block_mask(n, 1)), std::popcount(subset & block_mask(n, 2)),
            std::popcount(subset & block_mask(n, 3))};
}

// Orbit labels: admissible (u, v) in CoeffTable grid order.
class OrbitIndex {
public:
    OrbitIndex(const BlockTriple& n, int k) : n_(n), table_(n, k) {
        for (auto uv : table_.grid()) {
            index_.emplace(uv, labels_.size());
            labels_.push_back(uv);
        }
    }

    std::size_t size() const { return labels_.size(); }
    const std::pair<int, int>& label(std::size_t i) const { return labels_[i]; }
    std::size_t of(std::uint64_t subset) const {
        auto occ = occupation(n_, subset);
        return index_.at({occ[0], occ[1]});
    }
    BigInt orbit_size(std::size_t i) const {
        auto [u, v] = labels_[i];
        return binom(n_.n1(), u) * binom(n_.n2(), v) * binom(n_.n3(), table_.k() - u - v);
    }

private:
    BlockTriple n_;
    CoeffTable table_;
    std::vector<std::pair<int, int>> labels_;
    std::map<std::pair<int, int>, std::size_t> index_;
};

std::vector<Rational> orbit_values(const OrbitIndex& orbits, const VkVector& v) {
    std::vector<Rational> sums(orbits.size());
    const auto& subsets = v.space->subsets();
    for (std::size_t i = 0; i < subsets.size(); ++i) sums[orbits.of(subsets[i])] += v.coords[i];
    for (std::size_t o = 0; o < orbits.size(); ++o) sums[o] /= Rational(orbits.orbit_size(o));
    return sums;
}

}  // namespace

Rational phi_character_oracle(const std::vector<int>& composition, int k, const Permutation& g,
                              const OracleLimits& limits) {
    const YoungSubgroup group(composition);
    const int N = group.degree();
    if (k < 0 || 2 * k > N) throw InvalidInput("character oracle needs 0 <= 2k <= N");
    if (g.size() != N) throw InvalidInput("character oracle: permutation has the wrong degree");
    for (int c : composition)
        if (c < 1) throw InvalidInput("character oracle: block sizes must be positive");

    const std::uint64_t order = group.order();
    if (order == 0 || order > limits.max_group_order)
        throw ResourceLimitExceeded("Young subgroup too large to enumerate", order == 0 ? ~std::uint64_t{0} : order,
                                    limits.max_group_order);

    const Partition label = two_row_partition(N, k);
    BigInt total = 0;
    for (const Permutation& h : group) total += mn_character(label, cycle_type(compose(g, h)));
    return Rational(total, BigInt(static_cast<unsigned long>(order)));
}

Rational phi_character_oracle(const BlockTriple& n, int k, const Permutation& g, const OracleLimits& limits) {
    return phi_character_oracle(n.composition(), k, g, limits);
}

SubsetSpace::SubsetSpace(int N, int k) : N_(N), k_(k), subsets_(k_subsets(N, k)) {
    for (std::size_t i = 0; i < subsets_.size(); ++i) index_.emplace(subsets_[i], i);
}

std::size_t SubsetSpace::index_of(std::uint64_t subset) const {
    auto it = index_.find(subset);
    if (it == index_.end()) throw InvalidInput("subset not in this space");
    return it->second;
}

bool VkVector::satisfies_divergence() const {
    const int N = space->N();
    const int k = space->k();
    if (k == 0) return true;
    for (std::uint64_t F : k_subsets(N, k - 1)) {
        Rational sum(0);
        for (int i = 0; i < N; ++i)
            if (!(F >> i & 1)) sum += at(F | std::uint64_t{1} << i);
        if (!sum.is_zero()) return false;
    }
    return true;
}

std::vector<VkVector> build_Vk_basis(int N, int k, const OracleLimits& limits) {
    if (k < 0 || 2 * k > N) throw InvalidInput("build_Vk_basis needs 0 <= 2k <= N");
    check_subset_bound(N, k, limits);
    auto space = std::make_shared<const SubsetSpace>(N, k);

    const auto lower = k > 0 ? k_subsets(N, k - 1) : std::vector<std::uint64_t>{};
    RationalMatrix divergence(lower.size(), space->size());
    for (std::size_t r = 0; r < lower.size(); ++r)
        for (int i = 0; i < N; ++i)
            if (!(lower[r] >> i & 1)) divergence(r, space->index_of(lower[r] | std::uint64_t{1} << i)) = 1;

    std::vector<VkVector> basis;
    for (auto& v : nullspace(divergence)) basis.push_back(VkVector{space, std::move(v)});
    return basis;
}

std::vector<VkVector> invariants_in_Vk(const BlockTriple& n, int k, const OracleLimits& limits) {
    require_two_row(n, k);
    const int N = n.N();
    check_subset_bound(N, k, limits);
    if (k > 0) check_subset_bound(N, k - 1, limits);

    auto space = std::make_shared<const SubsetSpace>(N, k);
    const OrbitIndex orbits(n, k);

    const auto lower = k > 0 ? k_subsets(N, k - 1) : std::vector<std::uint64_t>{};
    RationalMatrix divergence(lower.size(), orbits.size());
    for (std::size_t r = 0; r < lower.size(); ++r)
        for (int i = 0; i < N; ++i)
            if (!(lower[r] >> i & 1)) divergence(r, orbits.of(lower[r] | std::uint64_t{1} << i)) += 1;

    std::vector<VkVector> basis;
    for (const auto& y : nullspace(divergence)) {
        VkVector v{space, std::vector<Rational>(space->size())};
        for (std::size_t i = 0; i < space->size(); ++i) v.coords[i] = y[orbits.of(space->subsets()[i])];
        basis.push_back(std::move(v));
    }
    return basis;
}

VkVector act(const Permutation& g, const VkVector& v) {
    if (g.size() != v.space->N()) throw InvalidInput("act: permutation has the wrong degree");
    VkVector out{v.space, std::vector<Rational>(v.coords.size())};
    const auto& subsets = v.space->subsets();
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        std::uint64_t image = 0;
        for (int j = 0; j < g.size(); ++j)
            if (subsets[i] >> j & 1) image |= std::uint64_t{1} << g(j);
        out.coords[v.space->index_of(image)] = v.coords[i];
    }
    return out;
}

VkVector project_invariant(const BlockTriple& n, const VkVector& v) {
    if (n.N() != v.space->N()) throw InvalidInput("project_invariant: degree mismatch");
    const OrbitIndex orbits(n, v.space->k());
    const auto averages = orbit_values(orbits, v);
    VkVector out{v.space, std::vector<Rational>(v.coords.size())};
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] = averages[orbits.of(v.space->subsets()[i])];
    return out;
}

CoeffTable to_coeff_table(const BlockTriple& n, const VkVector& v) {
    if (n.N() != v.space->N()) throw InvalidInput("to_coeff_table: degree mismatch");
    const int k = v.space->k();
    CoeffTable table(n, k);
    const OrbitIndex orbits(n, k);
    std::vector<char> seen(orbits.size(), 0);
    const auto& subsets = v.space->subsets();
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        const std::size_t o = orbits.of(subsets[i]);
        auto [u, w] = orbits.label(o);
        if (!seen[o]) {
            table.set(u, w, v.coords[i]);
            seen[o] = 1;
        } else if (table.at(u, w) != v.coords[i]) {
            throw InvalidInput("to_coeff_table: vector is not constant on G_n-orbits");
        }
    }
    return table;
}

Rational phi_module_oracle(const BlockTriple& n, int k, const Permutation& g, const OracleLimits& limits) {
    if (g.size() != n.N()) throw InvalidInput("module oracle: permutation has the wrong degree");
    const auto basis = invariants_in_Vk(n, k, limits);
    if (basis.empty()) return Rational(0);

    const OrbitIndex orbits(n, k);
    std::vector<std::vector<Rational>> columns;
    for (const VkVector& b : basis) columns.push_back(orbit_values(orbits, b));
    const RationalMatrix Y = RationalMatrix::from_columns(columns, orbits.size());

    Rational trace(0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const VkVector image = project_invariant(n, act(g, basis[i]));
        const auto column = solve_exact(Y, orbit_values(orbits, image));
        if (!column) throw InternalError("projected image left the invariant subspace of V_k");
        trace += (*column)[i];
    }
    return trace;
}

}  // namespace spherical
