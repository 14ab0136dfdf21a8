#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spherical/oracle.hpp"

namespace spherical::cli {

/// Outcome of one exhaustive verification suite.
struct SweepReport {
    std::string suite;
    std::uint64_t comparisons = 0;
    std::uint64_t failures = 0;
    std::optional<std::string> first_counterexample;

    bool passed() const { return failures == 0; }
};

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one suite over every n with 1 <= n_i <= max_block and every
/// 0 <= k <= N/2. Work is split across `threads` workers; the report is
/// identical for any thread count.
///   twocycle    phi_2cycle == character oracle, all three pairs
///   threecycle  phi_3cycle == character oracle
///   eigen       apply_rho_g2(psi_m) == g2_eigenvalue(m) psi_m
///   diffeq      every psi_m table satisfies the difference equation
SweepReport run_suite(const std::string& suite, int max_block, unsigned threads, const OracleLimits& limits = {});

}  // namespace spherical::cli
