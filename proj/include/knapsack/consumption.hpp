#pragma once

#include <vector>

#include "knapsack/distribution.hpp"

namespace knapsack {

// Arguments of the consumption function: k remaining periods, arrival
// probability p, remaining capacity x.
struct ConsumptionQuery {
    const WeightDistribution& dist;
    int remaining_periods;  // k >= 1
    double arrival_prob;    // p in (0,1]
    double capacity;        // x >= 0, finite
};

// The threshold that spreads the remaining capacity evenly, in expectation,
// over the remaining arrivals: the unique eps with
//   ∫_0^eps w dF(w) = x / (k p),
// or +inf when x exceeds k*p*mean. x = 0 gives 0.
double epsilon(const ConsumptionQuery& q);

// d/dx of epsilon via the implicit function theorem:
//   eps'(x) = 1 / (k p eps f(eps)).
// Requires 0 < x < k*p*mean; throws DegenerateDensity when f(eps) = 0.
double epsilon_derivative(const ConsumptionQuery& q);

// Feasible re-optimized threshold: min{x, epsilon(q)}. Always finite.
double heuristic_threshold(const ConsumptionQuery& q);

// Number of periods beyond which the consumption threshold stays inside the
// typical-class neighborhood (0, w_bar) for every x in [0,c]:
//   K = ceil(c / (p * partial_moment(w_bar))), clamped to at least 1.
// Throws MissingTypicalParams when the distribution declares no w_bar.
int compute_K(const WeightDistribution& dist, double c, double p);

// epsilon for all grid abscissae x_j = j*step, j = 0..num_points-1, at fixed
// (k, p). Single monotone sweep: x and eps increase together, so each point
// reuses the previous root as a bracket endpoint.
std::vector<double> epsilon_grid(const WeightDistribution& dist, int k, double p, double step,
                                 int num_points);

}  // namespace knapsack
