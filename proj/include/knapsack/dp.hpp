#pragma once

#include <iosfwd>
#include <vector>

#include "knapsack/heuristic.hpp"
#include "knapsack/instance.hpp"
#include "knapsack/value_grid.hpp"

namespace knapsack {

// Optimal online policy by backward induction on the capacity grid:
//   v*_k(x) = (1 - p F(x)) v*_{k-1}(x)
//           + p ∫_0^x max{ r + v*_{k-1}(x-w), v*_{k-1}(x) } dF(w),
// with v*_0 = 0. Thresholds store H*_k(x), the largest weight whose
// acceptance is optimal; ties at equality accept.
ValueGrid bellman_optimal(const KnapsackInstance& inst, const GridOptions& opts = {});

// Multi-type Bellman system. `average` holds the type-averaged continuation
// value (which coincides with the single-type recursion on the conditional
// mixture); per-type value lines V_k(x,j) and thresholds H*_k(x,j) are
// materialized for the retained steps, types j = 1..J.
struct MultiTypeGrid {
    ValueGrid average;
    std::vector<std::vector<std::vector<double>>> type_values;      // [row][type-1][x]
    std::vector<std::vector<std::vector<double>>> type_thresholds;  // [row][type-1][x]
};

MultiTypeGrid bellman_multitype(const KnapsackInstance& inst, const GridOptions& opts = {});

// CSV with columns k,x,value,threshold,type for every retained step.
void write_multitype_csv(const MultiTypeGrid& grid, std::ostream& os);

// v*_n(c) - v_hat_n(c) with both recursions run at the same grid step.
double optimality_gap(const KnapsackInstance& inst, double grid_step);

}  // namespace knapsack
