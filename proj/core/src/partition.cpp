#include "spherical/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "spherical/combinatorics.hpp"
#include "spherical/errors.hpp"

namespace spherical {

Partition::Partition(std::vector<int> parts) {
    for (int p : parts)
        if (p < 0) throw InvalidInput("partition parts must be nonnegative");
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    for (int p : parts) weight_ += p;
    parts_ = std::move(parts);
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw InvalidInput("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

BigInt centralizer_order(const Partition& mu) {
    std::map<int, unsigned> counts;
    for (int p : mu.parts()) ++counts[p];
    BigInt out = 1;
    for (auto [part, count] : counts) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), count);
        out *= power * factorial(count);
    }
    return out;
}

Partition two_row_partition(int N, int k) {
    if (k < 0 || 2 * k > N) throw InvalidInput("two-row label requires 0 <= 2k <= N");
    return Partition{N - k, k};
}

}  // namespace spherical
