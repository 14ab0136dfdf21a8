#include "spherical/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "spherical/combinatorics.hpp"
#include "spherical/errors.hpp"

namespace spherical {

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

class CharacterCache {
public:
    bool lookup(const Key& key, BigInt& out) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end()) return false;
        out = it->second;
        return true;
    }

    void store(Key key, const BigInt& value) {
        std::unique_lock lock(mutex_);
        table_.emplace(std::move(key), value);
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<Key, BigInt> table_;
};

CharacterCache& cache() {
    static CharacterCache instance;
    return instance;
}

// lambda: parts in decreasing order; mu: the cycle lengths still to remove.
// Border strips are removed through the beta-set (first-column hook lengths):
// a strip of length r corresponds to sliding a bead from b to b - r onto an
// empty position, with sign (-1)^(beads strictly between).
BigInt mn_recursive(const std::vector<int>& lambda, const std::vector<int>& mu) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;

    Key key{lambda, mu};
    BigInt cached;
    if (cache().lookup(key, cached)) return cached;

    const int r = mu.front();
    const std::vector<int> rest(mu.begin() + 1, mu.end());
    const int len = static_cast<int>(lambda.size());

    std::vector<int> beta(lambda.size());
    for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

    BigInt total = 0;
    for (int i = 0; i < len; ++i) {
        const int b = beta[static_cast<std::size_t>(i)];
        const int target = b - r;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;

        int between = 0;
        for (int c : beta)
            if (c > target && c < b) ++between;

        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = target;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> smaller;
        for (int j = 0; j < len; ++j) {
            int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
            if (part > 0) smaller.push_back(part);
        }

        BigInt sub = mn_recursive(smaller, rest);
        if (between % 2) total -= sub;
        else total += sub;
    }

    cache().store(std::move(key), total);
    return total;
}

}  // namespace

BigInt mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw InvalidInput("mn_character: |lambda| = " + std::to_string(lambda.weight()) +
                           " differs from |mu| = " + std::to_string(mu.weight()));
    return mn_recursive(lambda.parts(), mu.parts());
}

std::size_t mn_cache_size() { return cache().size(); }

BigInt dim_two_row(int N, int k) {
    if (k < 0 || 2 * k > N) throw InvalidInput("dim_two_row requires 0 <= 2k <= N");
    return binom(N, k) - binom(N, k - 1);
}

MRange m_range(const BlockTriple& n, int k) {
    return MRange{std::max(0, k - n.n3()), std::min({n.n1(), n.n2(), k, n.n1() + n.n2() - k})};
}

int multiplicity(const BlockTriple& n, int k) {
    require_two_row(n, k);
    return m_range(n, k).count();
}

void require_two_row(const BlockTriple& n, int k) {
    if (k < 0 || 2 * k > n.N())
        throw InvalidInput("two-row label needs 0 <= 2k <= N; got k = " + std::to_string(k) +
                           ", N = " + std::to_string(n.N()));
}

}  // namespace spherical
