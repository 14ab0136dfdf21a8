#pragma once

#include <span>
#include <string>
#include <vector>

#include "spherical/partition.hpp"

namespace spherical {

/// Permutation of {0, ..., N-1} in one-line notation: p(i) = images()[i].
///
/// Indices are zero-based throughout the library; one_line() and
/// from_one_line() convert to and from the usual 1-based notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation from_one_line(std::span<const int> one_based);
    /// The cycle points[0] -> points[1] -> ... -> points[back] -> points[0].
    static Permutation cycle(int n, std::span<const int> points);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }
    std::vector<int> one_line() const;
    bool is_identity() const;

    Permutation inverse() const;

    std::string str() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// (p o q)(i) = p(q(i)): q is applied first.
Permutation compose(const Permutation& p, const Permutation& q);

/// Cycle lengths in decreasing order, fixed points included as 1s.
Partition cycle_type(const Permutation& p);

}  // namespace spherical
