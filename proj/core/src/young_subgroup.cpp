#include "spherical/young_subgroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "spherical/errors.hpp"

namespace spherical {

YoungSubgroup::YoungSubgroup(std::vector<int> composition) : composition_(std::move(composition)) {
    for (int c : composition_) {
        if (c < 0) throw InvalidInput("Young subgroup: negative block size");
        degree_ += c;
    }
}

std::uint64_t YoungSubgroup::order() const {
    std::uint64_t out = 1;
    for (int c : composition_)
        for (int i = 2; i <= c; ++i) {
            if (out > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(i)) return 0;
            out *= static_cast<std::uint64_t>(i);
        }
    return out;
}

YoungSubgroup::iterator::iterator(const YoungSubgroup& group) : group_(&group), done_(false) {
    for (int c : group.composition_) {
        std::vector<int> block(static_cast<std::size_t>(c));
        std::iota(block.begin(), block.end(), 0);
        blocks_.push_back(std::move(block));
    }
    rebuild();
}

void YoungSubgroup::iterator::rebuild() {
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(group_->degree_));
    int offset = 0;
    for (const auto& block : blocks_) {
        for (int v : block) images.push_back(offset + v);
        offset += static_cast<int>(block.size());
    }
    current_ = Permutation(std::move(images));
}

YoungSubgroup::iterator& YoungSubgroup::iterator::operator++() {
    // Odometer over the blocks; next_permutation wraps a block back to sorted
    // order when it overflows, carrying into the next block.
    for (auto& block : blocks_) {
        if (std::next_permutation(block.begin(), block.end())) {
            rebuild();
            return *this;
        }
    }
    done_ = true;
    return *this;
}

}  // namespace spherical
