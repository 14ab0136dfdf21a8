#include <gtest/gtest.h>

#include <random>

#include "reference.hpp"
#include "spherical/characters.hpp"
#include "spherical/closed_form.hpp"
#include "spherical/errors.hpp"
#include "spherical/invariant_calculus.hpp"
#include "spherical/oracle.hpp"
#include "spherical/young_subgroup.hpp"

namespace spherical {
namespace {

TEST(CharacterOracle, Examples) {
    for (const auto& [n, k] : testing::sweep(3))
        EXPECT_EQ(phi_character_oracle(n, k, Permutation::identity(n.N())), Rational(multiplicity(n, k)));
    const BlockTriple ones(1, 1, 1);
    EXPECT_EQ(phi_character_oracle(ones, 1, embed_cycle(BlockSubset{1, 2, 3}, ones)), Rational(-1));
    const BlockTriple twos(2, 2, 2);
    EXPECT_EQ(phi_character_oracle(twos, 1, embed_cycle(BlockSubset{1, 2}, twos)), Rational(1));
}

TEST(CharacterOracle, RefusesLargeGroups) {
    const BlockTriple n(3, 3, 3);
    OracleLimits tight;
    tight.max_group_order = 100;
    EXPECT_THROW(phi_character_oracle(n, 1, Permutation::identity(9), tight), ResourceLimitExceeded);
    EXPECT_THROW(phi_character_oracle(BlockTriple(9, 9, 9), 3, Permutation::identity(27)), ResourceLimitExceeded);
    EXPECT_THROW(phi_character_oracle(n, 5, Permutation::identity(9)), InvalidInput);
    EXPECT_THROW(phi_character_oracle(n, 1, Permutation::identity(8)), InvalidInput);
}

TEST(CharacterOracle, IndependentOfCyclePlacement) {
    // Any cycle meeting the same blocks once each gives the same value.
    std::mt19937 rng(23);
    for (const auto& [n, k] : testing::sweep(3))
        for (const BlockSubset& A : all_block_subsets()) {
            if (A.size() < 2) continue;
            std::vector<int> points;
            for (int j : A.blocks()) points.push_back(n.start(j) + static_cast<int>(rng() % static_cast<unsigned>(n.block(j))));
            std::shuffle(points.begin(), points.end(), rng);
            const Permutation g = Permutation::cycle(n.N(), points);
            EXPECT_EQ(phi_character_oracle(n, k, g), phi_closed(n, k, A));
            EXPECT_EQ(phi_module_oracle(n, k, g), phi_closed(n, k, A));
        }
}

TEST(VkBasis, Dimensions) {
    EXPECT_EQ(build_Vk_basis(4, 0).size(), 1u);
    EXPECT_EQ(build_Vk_basis(3, 1).size(), 2u);
    EXPECT_EQ(build_Vk_basis(6, 2).size(), 9u);
    for (int N = 0; N <= 8; ++N)
        for (int k = 0; 2 * k <= N; ++k) {
            const auto basis = build_Vk_basis(N, k);
            EXPECT_EQ(BigInt(static_cast<unsigned long>(basis.size())), dim_two_row(N, k));
            for (const VkVector& v : basis) EXPECT_TRUE(v.satisfies_divergence());
        }
    OracleLimits tight;
    tight.max_subsets = 10;
    EXPECT_THROW(build_Vk_basis(6, 3, tight), ResourceLimitExceeded);
}

TEST(Invariants, DimensionsAndDifferenceEquation) {
    const auto k0 = invariants_in_Vk(BlockTriple(2, 1, 3), 0);
    ASSERT_EQ(k0.size(), 1u);
    EXPECT_EQ(invariants_in_Vk(BlockTriple(1, 1, 1), 1).size(), 2u);
    for (const auto& [n, k] : testing::sweep(3)) {
        const auto inv = invariants_in_Vk(n, k);
        EXPECT_EQ(inv.size(), static_cast<std::size_t>(multiplicity(n, k)));
        for (const VkVector& v : inv) {
            EXPECT_TRUE(v.satisfies_divergence());
            EXPECT_TRUE(check_difference_equation(to_coeff_table(n, v)));
            const YoungSubgroup group(n);
            for (const Permutation& h : group) EXPECT_EQ(act(h, v).coords, v.coords);
        }
    }
}

TEST(Projection, IdempotentAndFixesInvariants) {
    for (const BlockTriple n : {BlockTriple(2, 1, 2), BlockTriple(2, 2, 2), BlockTriple(3, 1, 2)})
        for (int k = 0; 2 * k <= n.N(); ++k) {
            for (const VkVector& v : build_Vk_basis(n.N(), k)) {
                const VkVector once = project_invariant(n, v);
                EXPECT_EQ(project_invariant(n, once).coords, once.coords);
                EXPECT_TRUE(once.satisfies_divergence());
            }
            for (const VkVector& v : invariants_in_Vk(n, k)) EXPECT_EQ(project_invariant(n, v).coords, v.coords);
        }
}

TEST(Projection, NonInvariantTableRejected) {
    const BlockTriple n(2, 1, 1);
    const auto basis = build_Vk_basis(n.N(), 1);
    bool rejected = false;
    for (const VkVector& v : basis) {
        if (project_invariant(n, v).coords == v.coords) continue;
        EXPECT_THROW(to_coeff_table(n, v), InvalidInput);
        rejected = true;
    }
    EXPECT_TRUE(rejected);
}

TEST(ModuleOracle, Examples) {
    for (const auto& [n, k] : testing::sweep(3))
        EXPECT_EQ(phi_module_oracle(n, k, Permutation::identity(n.N())), Rational(multiplicity(n, k)));
    const BlockTriple ones(1, 1, 1);
    EXPECT_EQ(phi_module_oracle(ones, 1, embed_cycle(BlockSubset{1, 2}, ones)), Rational(0));
    OracleLimits tight;
    tight.max_subsets = 5;
    EXPECT_THROW(phi_module_oracle(BlockTriple(2, 2, 2), 3, Permutation::identity(6), tight), ResourceLimitExceeded);
}

TEST(ModuleOracle, AgreesWithCharacterOracle) {
    std::vector<testing::SweepPoint> points = testing::sweep(3);
    for (const BlockTriple n : {BlockTriple(4, 1, 1), BlockTriple(4, 2, 3), BlockTriple(1, 4, 4), BlockTriple(4, 4, 2)})
        for (int k = 0; 2 * k <= n.N(); ++k) points.push_back({n, k});
    for (const auto& [n, k] : points)
        for (const BlockSubset& A : all_block_subsets()) {
            const Permutation g = embed_cycle(A, n);
            EXPECT_EQ(phi_module_oracle(n, k, g), phi_character_oracle(n, k, g)) << n.str() << " k=" << k << " " << A.str();
        }
}

TEST(CharacterOracle, AcceptsAnyComposition) {
    const std::vector<int> comp{2, 1, 1, 2};
    const std::vector<int> points{0, 2, 3};
    EXPECT_EQ(phi_character_oracle(comp, 0, Permutation::cycle(6, points)), Rational(1));
    EXPECT_EQ(phi_character_oracle(comp, 1, Permutation::identity(6)), testing::frobenius_multiplicity(comp, 1));
}

}  // namespace
}  // namespace spherical
