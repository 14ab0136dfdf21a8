#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include "spherical/blocks.hpp"
#include "spherical/permutation.hpp"

namespace spherical {

/// The Young subgroup S_{c_1} x ... x S_{c_r} of S_N for a composition c of N,
/// acting on consecutive intervals. Iterating yields every element exactly
/// once; each pass restarts from the identity.
class YoungSubgroup {
public:
    explicit YoungSubgroup(std::vector<int> composition);
    explicit YoungSubgroup(const BlockTriple& n) : YoungSubgroup(n.composition()) {}

    const std::vector<int>& composition() const { return composition_; }
    int degree() const { return degree_; }
    /// prod c_i!, or 0 if it does not fit in 64 bits.
    std::uint64_t order() const;

    class iterator {
    public:
        using value_type = Permutation;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() = default;
        const Permutation& operator*() const { return current_; }
        const Permutation* operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

    private:
        friend class YoungSubgroup;
        explicit iterator(const YoungSubgroup& group);
        void rebuild();

        const YoungSubgroup* group_ = nullptr;
        std::vector<std::vector<int>> blocks_;
        Permutation current_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(*this); }
    std::default_sentinel_t end() const { return {}; }

private:
    std::vector<int> composition_;
    int degree_ = 0;
};

}  // namespace spherical
