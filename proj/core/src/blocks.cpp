#include "spherical/blocks.hpp"

#include <algorithm>

#include "spherical/errors.hpp"

namespace spherical {

namespace {

void check_label(int j) {
    if (j < 1 || j > 3) throw InvalidInput("block label must be 1, 2 or 3");
}

}  // namespace

BlockTriple::BlockTriple(int n1, int n2, int n3) : sizes_{n1, n2, n3} {
    if (n1 < 1 || n2 < 1 || n3 < 1)
        throw InvalidInput("block sizes must be positive, got " + str());
}

int BlockTriple::block(int j) const {
    check_label(j);
    return sizes_[static_cast<std::size_t>(j - 1)];
}

int BlockTriple::start(int j) const {
    check_label(j);
    int s = 0;
    for (int i = 1; i < j; ++i) s += block(i);
    return s;
}

int BlockTriple::block_of(int i) const {
    if (i < 0 || i >= N()) throw InvalidInput("position outside [0, N)");
    if (i < n1()) return 1;
    if (i < n1() + n2()) return 2;
    return 3;
}

BlockTriple BlockTriple::permuted(int a, int b, int c) const {
    if (a == b || b == c || a == c) throw InvalidInput("permuted: labels must be distinct");
    return BlockTriple(block(a), block(b), block(c));
}

std::string BlockTriple::str() const {
    return "(" + std::to_string(n1()) + "," + std::to_string(n2()) + "," + std::to_string(n3()) + ")";
}

BlockSubset::BlockSubset(std::vector<int> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw InvalidInput("block subset must be nonempty");
    for (int b : blocks_) check_label(b);
    std::sort(blocks_.begin(), blocks_.end());
    if (std::adjacent_find(blocks_.begin(), blocks_.end()) != blocks_.end())
        throw InvalidInput("block subset has repeated labels");
}

bool BlockSubset::contains(int block) const {
    return std::find(blocks_.begin(), blocks_.end(), block) != blocks_.end();
}

std::string BlockSubset::str() const {
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(blocks_[i]);
    }
    return out;
}

std::vector<BlockSubset> all_block_subsets() {
    return {BlockSubset{1},    BlockSubset{2},    BlockSubset{3},      BlockSubset{1, 2},
            BlockSubset{1, 3}, BlockSubset{2, 3}, BlockSubset{1, 2, 3}};
}

BlockPair::BlockPair(int a, int b) : first(a), second(b) {
    check_label(a);
    check_label(b);
    if (a == b) throw InvalidInput("block pair needs two distinct labels");
}

Permutation embed_cycle(const BlockSubset& A, const BlockTriple& n) {
    std::vector<int> points;
    for (int b : A.blocks()) points.push_back(n.start(b));
    return Permutation::cycle(n.N(), points);
}

}  // namespace spherical
