#pragma once

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

#include "spherical/permutation.hpp"

namespace spherical {

/// Composition (n1, n2, n3) of N into three consecutive intervals
/// I_1 = [0, n1), I_2 = [n1, n1+n2), I_3 = [n1+n2, N) (zero-based).
///
/// Blocks are addressed 1-based (block(1) == n1) to match the usual labels.
class BlockTriple {
public:
    BlockTriple(int n1, int n2, int n3);

    int n1() const { return sizes_[0]; }
    int n2() const { return sizes_[1]; }
    int n3() const { return sizes_[2]; }
    int N() const { return sizes_[0] + sizes_[1] + sizes_[2]; }

    int block(int j) const;
    /// First (zero-based) index of block j.
    int start(int j) const;
    /// Block label (1..3) containing zero-based position i.
    int block_of(int i) const;

    std::vector<int> composition() const { return {sizes_[0], sizes_[1], sizes_[2]}; }

    /// (n_a, n_b, n_c) for a permutation (a, b, c) of (1, 2, 3).
    BlockTriple permuted(int a, int b, int c) const;

    std::string str() const;

    friend bool operator==(const BlockTriple&, const BlockTriple&) = default;
    friend auto operator<=>(const BlockTriple&, const BlockTriple&) = default;

private:
    std::array<int, 3> sizes_;
};

/// Nonempty subset of block labels {1, 2, 3}, stored ascending.
class BlockSubset {
public:
    explicit BlockSubset(std::vector<int> blocks);
    BlockSubset(std::initializer_list<int> blocks) : BlockSubset(std::vector<int>(blocks)) {}

    const std::vector<int>& blocks() const { return blocks_; }
    std::size_t size() const { return blocks_.size(); }
    bool contains(int block) const;

    std::string str() const;

    friend bool operator==(const BlockSubset&, const BlockSubset&) = default;
    friend auto operator<=>(const BlockSubset&, const BlockSubset&) = default;

private:
    std::vector<int> blocks_;
};

/// All nonempty subsets of {1,2,3}, ordered by size then lexicographically.
std::vector<BlockSubset> all_block_subsets();

/// Ordered pair of distinct block labels.
struct BlockPair {
    int first;
    int second;

    BlockPair(int a, int b);
    /// The remaining label.
    int third() const { return 6 - first - second; }
};

/// The |A|-cycle through the first index of each block in A, in ascending
/// block order; identity when |A| == 1.
Permutation embed_cycle(const BlockSubset& A, const BlockTriple& n);

}  // namespace spherical
