#include "spherical/permutation.hpp"

#include <numeric>

#include "spherical/errors.hpp"

namespace spherical {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
            throw InvalidInput("not a permutation: " + str());
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 0) throw InvalidInput("negative permutation size");
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 0);
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_one_line(std::span<const int> one_based) {
    std::vector<int> images;
    images.reserve(one_based.size());
    for (int v : one_based) images.push_back(v - 1);
    return Permutation(std::move(images));
}

Permutation Permutation::cycle(int n, std::span<const int> points) {
    Permutation p = identity(n);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        int from = points[i];
        if (from < 0 || from >= n || used[static_cast<std::size_t>(from)])
            throw InvalidInput("cycle points must be distinct and in range");
        used[static_cast<std::size_t>(from)] = 1;
        p.images_[static_cast<std::size_t>(from)] = points[(i + 1) % points.size()];
    }
    return p;
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> out;
    out.reserve(images_.size());
    for (int v : images_) out.push_back(v + 1);
    return out;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>((*this)(i))] = i;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

std::string Permutation::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(images_[i] + 1);
    }
    return out + "]";
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw InvalidInput("compose: permutations of different sizes");
    std::vector<int> images(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) images[static_cast<std::size_t>(i)] = p(q(i));
    return Permutation(std::move(images));
}

Partition cycle_type(const Permutation& p) {
    std::vector<char> seen(static_cast<std::size_t>(p.size()), 0);
    std::vector<int> lengths;
    for (int i = 0; i < p.size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int length = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p(j)) {
            seen[static_cast<std::size_t>(j)] = 1;
            ++length;
        }
        lengths.push_back(length);
    }
    return Partition(std::move(lengths));
}

}  // namespace spherical
