#include <gtest/gtest.h>

#include <thread>

#include "reference.hpp"
#include "spherical/characters.hpp"
#include "spherical/errors.hpp"

namespace spherical {
namespace {

TEST(Characters, TrivialAndSign) {
    for (int N = 1; N <= 7; ++N)
        for (const Partition& mu : partitions_of(N)) {
            EXPECT_EQ(mn_character(Partition{N}, mu), 1);
            const int sign = (N - static_cast<int>(mu.length())) % 2 == 0 ? 1 : -1;
            EXPECT_EQ(mn_character(Partition(std::vector<int>(static_cast<std::size_t>(N), 1)), mu), sign);
        }
}

TEST(Characters, S3Table) {
    EXPECT_EQ(mn_character(Partition{2, 1}, Partition{3}), -1);
    EXPECT_EQ(mn_character(Partition{2, 1}, Partition{2, 1}), 0);
    EXPECT_EQ(mn_character(Partition{2, 1}, Partition{1, 1, 1}), 2);
    EXPECT_THROW(mn_character(Partition{2, 1}, Partition{2, 2}), InvalidInput);
}

TEST(Characters, Orthogonality) {
    for (int N = 1; N <= 6; ++N) {
        const auto parts = partitions_of(N);
        for (const Partition& a : parts)
            for (const Partition& b : parts) {
                EXPECT_EQ(testing::row_inner_product(a, b), Rational(a == b ? 1 : 0)) << a.str() << " " << b.str();
                EXPECT_EQ(testing::column_inner_product(a, b), a == b ? centralizer_order(a) : BigInt(0));
            }
    }
}

TEST(Characters, DimTwoRow) {
    EXPECT_EQ(dim_two_row(5, 0), 1);
    EXPECT_EQ(dim_two_row(6, 2), 9);
    EXPECT_EQ(dim_two_row(3, 1), 2);
    EXPECT_THROW(dim_two_row(3, 2), InvalidInput);
    for (int N = 0; N <= 12; ++N)
        for (int k = 0; 2 * k <= N; ++k)
            EXPECT_EQ(dim_two_row(N, k), testing::degree_at_identity(two_row_partition(N, k)));
}

TEST(Characters, MRangeAndMultiplicity) {
    const MRange r111 = m_range(BlockTriple(1, 1, 1), 1);
    EXPECT_EQ(r111.lower, 0);
    EXPECT_EQ(r111.upper, 1);
    const MRange r321 = m_range(BlockTriple(3, 2, 1), 2);
    EXPECT_EQ(r321.lower, 1);
    EXPECT_EQ(r321.upper, 2);
    EXPECT_EQ(multiplicity(BlockTriple(1, 1, 1), 1), 2);
    EXPECT_EQ(multiplicity(BlockTriple(3, 2, 1), 2), 2);
    for (const auto& [n, k] : testing::sweep(4))
        if (k == 0) {
            EXPECT_EQ(m_range(n, 0).lower, 0);
            EXPECT_EQ(m_range(n, 0).upper, 0);
            EXPECT_EQ(multiplicity(n, 0), 1);
        }
    EXPECT_THROW(multiplicity(BlockTriple(1, 1, 1), 2), InvalidInput);
}

TEST(Characters, MultiplicityMatchesFrobenius) {
    for (const auto& [n, k] : testing::sweep(4))
        EXPECT_EQ(Rational(multiplicity(n, k)), testing::frobenius_multiplicity(n.composition(), k)) << n.str() << k;
}

TEST(Characters, ConcurrentCallsAgreeWithSequential) {
    const int N = 9;
    const auto parts = partitions_of(N);
    std::vector<BigInt> sequential;
    for (const Partition& l : parts)
        for (const Partition& m : parts) sequential.push_back(mn_character(l, m));

    std::vector<std::vector<BigInt>> results(4);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < results.size(); ++t)
            pool.emplace_back([&, t] {
                for (auto li = parts.rbegin(); li != parts.rend(); ++li)
                    for (const Partition& m : parts) results[t].push_back(mn_character(*li, m));
            });
    }
    for (const auto& r : results) {
        ASSERT_EQ(r.size(), sequential.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = 0; j < parts.size(); ++j)
                EXPECT_EQ(r[(parts.size() - 1 - i) * parts.size() + j], sequential[i * parts.size() + j]);
    }
    EXPECT_GT(mn_cache_size(), 0u);
}

}  // namespace
}  // namespace spherical
