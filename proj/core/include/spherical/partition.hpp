#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "spherical/rational.hpp"

namespace spherical {

/// Integer partition with parts sorted in weakly decreasing order.
class Partition {
public:
    Partition() = default;
    /// Parts may be given in any order; they are sorted. Zero parts are
    /// dropped, negative parts are rejected.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Partitions of n in reverse lexicographic order ([n] first, [1^n] last).
std::vector<Partition> partitions_of(int n);

/// Order of the centralizer of a permutation of cycle type mu: prod_i i^{a_i} a_i!.
BigInt centralizer_order(const Partition& mu);

/// The two-row label [N-k, k] (trailing zero part dropped).
Partition two_row_partition(int N, int k);

}  // namespace spherical
