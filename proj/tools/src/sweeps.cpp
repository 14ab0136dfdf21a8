#include "sphfun/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "spherical/characters.hpp"
#include "spherical/closed_form.hpp"
#include "spherical/errors.hpp"
#include "spherical/hahn.hpp"
#include "spherical/invariant_calculus.hpp"

namespace spherical::cli {

namespace {

struct ItemResult {
    std::uint64_t comparisons = 0;
    std::uint64_t failures = 0;
    std::optional<std::string> first;
    std::exception_ptr error;

    void compare(bool ok, const std::function<std::string()>& describe) {
        ++comparisons;
        if (ok) return;
        ++failures;
        if (!first) first = describe();
    }
};

struct Point {
    BlockTriple n;
    int k;
};

std::string where(const BlockTriple& n, int k) { return "n=" + n.str() + " k=" + std::to_string(k); }

ItemResult run_point(const std::string& suite, const Point& p, const OracleLimits& limits) {
    ItemResult r;
    const BlockTriple& n = p.n;
    const int k = p.k;
    if (suite == "twocycle") {
        for (auto [a, b] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
            const Rational closed = phi_2cycle(n, k, BlockPair(a, b));
            const Rational oracle = phi_character_oracle(n, k, embed_cycle(BlockSubset{a, b}, n), limits);
            r.compare(closed == oracle, [&] {
                return where(n, k) + " pair=(" + std::to_string(a) + "," + std::to_string(b) +
                       ") closed=" + closed.str() + " oracle=" + oracle.str();
            });
        }
    } else if (suite == "threecycle") {
        const Rational closed = phi_3cycle(n, k);
        const Rational oracle = phi_character_oracle(n, k, embed_cycle(BlockSubset{1, 2, 3}, n), limits);
        r.compare(closed == oracle,
                  [&] { return where(n, k) + " closed=" + closed.str() + " oracle=" + oracle.str(); });
    } else if (suite == "eigen") {
        const MRange range = m_range(n, k);
        for (int m = range.lower; m <= range.upper; ++m) {
            const CoeffTable psi = psi_table(HahnContext(n, k, m));
            const CoeffTable image = apply_rho_g2(psi, BlockPair(1, 2));
            r.compare(image == g2_eigenvalue(m, n.n1(), n.n2()) * psi,
                      [&] { return where(n, k) + " m=" + std::to_string(m) + " image=" + image.str(); });
        }
    } else if (suite == "diffeq") {
        const MRange range = m_range(n, k);
        for (int m = range.lower; m <= range.upper; ++m) {
            const CoeffTable psi = psi_table(HahnContext(n, k, m));
            r.compare(check_difference_equation(psi),
                      [&] { return where(n, k) + " m=" + std::to_string(m) + " table=" + psi.str(); });
        }
    } else {
        throw InvalidInput("unknown suite '" + suite + "'");
    }
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"twocycle", "threecycle", "eigen", "diffeq"};
    return names;
}

SweepReport run_suite(const std::string& suite, int max_block, unsigned threads, const OracleLimits& limits) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw InvalidInput("unknown suite '" + suite + "'");
    if (max_block < 1) throw InvalidInput("max block must be at least 1");

    std::vector<Point> points;
    for (int n1 = 1; n1 <= max_block; ++n1)
        for (int n2 = 1; n2 <= max_block; ++n2)
            for (int n3 = 1; n3 <= max_block; ++n3) {
                const BlockTriple n(n1, n2, n3);
                for (int k = 0; 2 * k <= n.N(); ++k) points.push_back({n, k});
            }

    std::vector<ItemResult> results(points.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
            try {
                results[i] = run_point(suite, points[i], limits);
            } catch (...) {
                results[i].error = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
        worker();
    }

    SweepReport report{suite, 0, 0, std::nullopt};
    for (const ItemResult& r : results) {
        if (r.error) std::rethrow_exception(r.error);
        report.comparisons += r.comparisons;
        report.failures += r.failures;
        if (!report.first_counterexample && r.first) report.first_counterexample = r.first;
    }
    return report;
}

}  // namespace spherical::cli
