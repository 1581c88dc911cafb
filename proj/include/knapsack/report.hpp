#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "knapsack/distribution.hpp"

namespace knapsack {

struct RegretRow {
    int n = 0;
    double prophet_bound = 0.0;
    double v_star = 0.0;
    double v_hat = 0.0;
    double mc_offline_mean = 0.0;
    double mc_stderr = 0.0;
    double regret_bound_star = 0.0;  // prophet_bound - v_star
    double regret_bound_hat = 0.0;   // prophet_bound - v_hat
    double gap = 0.0;                // v_star - v_hat
    double scaled_star = 0.0;        // regret_bound_star / log n; NaN when n = 1
    double scaled_hat = 0.0;         // regret_bound_hat / log n; NaN when n = 1
};

struct RegretReport {
    std::vector<RegretRow> rows;
};

struct ReportConfig {
    DistPtr dist;
    std::vector<int> n_list = {10, 100, 1000, 10000};
    double c = 1.0;
    double p = 1.0;
    double r = 1.0;
    double grid_step = 1e-4;
    long trials = 100000;
    std::uint64_t seed = 42;
};

// Runs both value recursions once up to max(n_list), harvesting every
// intermediate horizon from the same sweep, plus one Monte Carlo offline
// estimate per requested n. Deterministic given the seed.
RegretReport build_regret_report(const ReportConfig& cfg);

// Header exactly:
// n,prophet_bound,v_star,v_hat,mc_offline_mean,mc_stderr,regret_bound_star,
// regret_bound_hat,gap,scaled_star,scaled_hat -- scaled cells empty at n = 1.
void write_regret_csv(const RegretReport& report, std::ostream& os);

}  // namespace knapsack
