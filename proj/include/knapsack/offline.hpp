#pragma once

#include <cstdint>
#include <vector>

#include "knapsack/instance.hpp"

namespace knapsack {

// One simulated horizon of item weights. A period without an arrival carries
// the sentinel +inf, which every threshold comparison rejects and every sort
// places last.
struct SamplePath {
    std::vector<double> weights;
    std::uint64_t seed = 0;
};

struct OfflineResult {
    int count = 0;               // N*: number of items the prophet selects
    double reward = 0.0;         // r * count
    std::vector<int> selected_indices;
};

// Feasibility comparisons share one slack so that the sort oracle and the
// leave-one-out thresholds always agree on what fits: sum <= c holds up to
// 1e-12 * max(1, c).
bool fits_capacity(double sum, double c);

// Draw the weights for one trial. Bernoulli arrivals draw one uniform for the
// arrival indicator (skipped when p = 1) and one for the weight; multinomial
// arrivals pick the type first. Fully determined by (seed, trial).
SamplePath generate_path(const KnapsackInstance& inst, std::uint64_t seed, std::uint64_t trial = 0);

// Prophet benchmark: the largest m whose m smallest weights fit in c.
// Ties break toward the lowest index (probability zero under continuous F).
OfflineResult offline_sort(const SamplePath& path, double c, double r);

// Threshold of the leave-one-out policy for item i (0-based): with tau the
// offline count on the path without item i,
//   h = max{ W_(tau, n-1), c - sum of the tau smallest leave-one-out weights },
// and W_(0, n-1) = 0 so that h = c when tau = 0.
double leave_one_out_threshold(const SamplePath& path, int item, double c);

// n p r F(eps_np(c)); equals n p r when the consumption threshold is infinite.
double prophet_upper_bound(const KnapsackInstance& inst);

// Non-adaptive lower-bound formula for the p = 1, r = 1 regime:
//   n F(eps_n(c)) { 1 - sqrt(eps_n(c)/c) - eps_n(c)/c }.
// May be negative for small n; returned as-is. Requires eps_n(c) finite.
double rhee_talagrand_bound(const WeightDistribution& dist, int n, double c);

struct MonteCarloEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long trials = 0;
};

// Seeded Monte Carlo of the offline reward. Trials are independent streams,
// so the estimate is reproducible and identical for any thread count.
MonteCarloEstimate estimate_offline_mean(const KnapsackInstance& inst, long trials,
                                         std::uint64_t seed);

}  // namespace knapsack
