#pragma once

#include <cstdint>
#include <vector>

#include "knapsack/instance.hpp"
#include "knapsack/offline.hpp"
#include "knapsack/value_grid.hpp"

namespace knapsack {

struct TrajectoryStep {
    bool arrived = false;
    double weight = 0.0;  // +inf when no arrival
    double threshold = 0.0;
    bool accepted = false;
    double remaining = 0.0;  // capacity after the decision
};

// Per-item log of one simulated sample path under the re-optimized policy.
struct TrajectoryRecord {
    std::vector<TrajectoryStep> steps;
    double total_reward = 0.0;
};

struct GridOptions {
    double grid_step = 1e-4;
    std::vector<int> retain_steps;  // k values whose full rows are kept; n is always retained
};

// Run the re-optimized policy on a given path: item i is accepted iff its
// weight is at most min{x, eps_{(n-i+1)p}(x)} at the current capacity x.
TrajectoryRecord simulate_heuristic(const KnapsackInstance& inst, const SamplePath& path);

// Convenience overload drawing the path from (seed, trial).
TrajectoryRecord simulate_heuristic(const KnapsackInstance& inst, std::uint64_t seed,
                                    std::uint64_t trial = 0);

// Exact value recursion of the re-optimized policy on the capacity grid:
//   v_k(x) = (1 - p F(h_k(x))) v_{k-1}(x) + p ∫_0^{h_k(x)} (r + v_{k-1}(x-w)) dF(w)
// with v_0 = 0 and h_k(x) = min{x, eps_kp(x)}. Also tracks the maximal
// residual rho_bar_k = max_x { k p r F(eps_kp(x)) - v_k(x) } at every step.
ValueGrid value_recursion_heuristic(const KnapsackInstance& inst, const GridOptions& opts = {});

struct ResidualReport {
    std::vector<double> max_residual;             // rho_bar_k for k = 0..n
    std::vector<int> retained_steps;              // steps with full residual rows
    std::vector<std::vector<double>> residuals;   // rho_k(x) over the grid
};

// rho_k(x) = k p r F(eps_kp(x)) - v_k(x) for the retained rows of a computed
// heuristic grid, plus the per-step maxima recorded during the sweep.
ResidualReport residual_report(const KnapsackInstance& inst, const ValueGrid& grid);

}  // namespace knapsack
