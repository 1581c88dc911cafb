#pragma once

#include <iosfwd>
#include <vector>

#include "knapsack/distribution.hpp"

namespace knapsack {

// Discretized capacity axis: x_j = j * step for j = 0..num_points-1, with the
// requested capacity rounded up to a whole number of cells.
struct GridSpec {
    double step = 0.0;
    int num_points = 0;
    double capacity = 0.0;
};

// Throws GridTooCoarse when grid_step > c/10 (c = 0 degenerates to the single
// point x = 0 and is always representable).
GridSpec make_grid_spec(double c, double grid_step);

// Value arrays produced by the backward recursions. Full rows are kept only
// for the retained steps; the value at full capacity and (for the heuristic)
// the maximal residual are tracked at every step, which is what the regret
// pipelines consume. Immutable once built.
struct ValueGrid {
    double grid_step = 0.0;
    double capacity = 0.0;  // rounded-up capacity actually used
    int horizon = 0;

    std::vector<double> value_at_capacity;  // index k = 0..horizon
    std::vector<double> max_residual;       // rho_bar_k; empty unless filled by the heuristic

    std::vector<int> retained_steps;              // sorted k values with full rows
    std::vector<std::vector<double>> values;      // parallel to retained_steps
    std::vector<std::vector<double>> thresholds;  // parallel to retained_steps

    int num_points() const { return static_cast<int>(values.empty() ? 0 : values.front().size()); }
    double x_at(int j) const { return static_cast<double>(j) * grid_step; }
    const std::vector<double>* row_values(int k) const;
    const std::vector<double>* row_thresholds(int k) const;
};

// CSV with columns k,x,value,threshold for every retained step.
void write_grid_csv(const ValueGrid& grid, std::ostream& os);

namespace grid {

// One backward-induction step over the whole axis. Given the previous value
// row v and a per-point acceptance threshold h_i <= x_i, computes
//   next_i = (1 - p F(h_i)) v_i + p [ r F(h_i) + ∫_0^{h_i} v(x_i - w) dF(w) ].
// The row is treated as piecewise linear. Densities that are exactly affine
// on their support use cumulative arrays (O(1) per point); anything else
// falls back to cell-mass trapezoid sums with the partial cell at h_i using
// the exact mass F(h_i) - F(x_J).
class StepEngine {
  public:
    StepEngine(const WeightDistribution& dist, const GridSpec& spec, double p, double r);

    // Caches the previous row (and its cumulative integrals on the affine
    // path). Must be called before the per-point evaluations below.
    void set_row(const std::vector<double>& prev);

    double accept_integral(int i, double h) const;  // ∫_0^h v(x_i - w) dF(w)
    double step_value(int i, double h) const;

    // Largest w in [0, x_i] with r + v(x_i - w) >= v(x_i); binary search over
    // cells (v is non-decreasing) then linear refinement inside the cell.
    double optimal_threshold(int i) const;

    double prev_at(double x) const;  // piecewise-linear lookup
    const GridSpec& spec() const { return spec_; }
    double arrival_prob() const { return p_; }

  private:
    const WeightDistribution& dist_;
    GridSpec spec_;
    double p_, r_;
    bool affine_ = false;
    double aff_a_ = 0.0, aff_b_ = 0.0;
    double support_hi_ = 0.0;

    const std::vector<double>* prev_ = nullptr;
    std::vector<double> cum_v_;   // ∫_0^{x_j} v(y) dy
    std::vector<double> cum_yv_;  // ∫_0^{x_j} y v(y) dy
    std::vector<double> cell_mass_;  // F(x_{j+1}) - F(x_j), direct path only

    double cum_v_at(double t) const;
    double cum_yv_at(double t) const;
};

}  // namespace grid

}  // namespace knapsack
