#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knapsack/rng.hpp"

namespace knapsack {

// Parameters for the typical-class diagnostics: the conditions are required
// to hold on (0, w_bar). lambda/gamma are declared only where an analytic
// value backs them; otherwise the diagnostic search supplies defaults.
struct TypicalParams {
    double w_bar;
    std::optional<double> lambda;
    std::optional<double> gamma;
};

// Exact affine density f(w) = intercept + slope*w on [0, support_hi].
// Distributions that expose this unlock the O(grid) value-recursion sweep.
struct AffineDensity {
    double intercept;
    double slope;
};

// Continuous non-negative weight law. Immutable after construction; safe for
// concurrent shared reads.
class WeightDistribution {
  public:
    virtual ~WeightDistribution() = default;

    virtual double cdf(double w) const = 0;
    virtual double density(double w) const = 0;

    // partial_moment(eps) = ∫_0^eps w dF(w); non-decreasing, caps at mean().
    virtual double partial_moment(double eps) const = 0;

    virtual double mean() const = 0;
    virtual double support_hi() const = 0;  // supremum of support, may be +inf

    // Smallest eps with partial_moment(eps) = y for y in [0, mean()].
    // Default: bracketed bisection + Newton polish on the monotone partial
    // moment (absolute tolerance ~1e-13 in eps). y == mean() maps to
    // support_hi. Families with closed-form inverses override.
    virtual double partial_moment_inverse(double y) const;

    // Quantile transform for sampling; default bisection on the cdf with
    // tolerance 1e-12 on the cdf scale.
    virtual double quantile(double u) const;

    virtual std::optional<TypicalParams> typical_params() const { return std::nullopt; }
    virtual std::optional<AffineDensity> affine_density() const { return std::nullopt; }

    virtual std::string name() const = 0;
};

using DistPtr = std::shared_ptr<const WeightDistribution>;

// Factory over the built-in families. Recognized names and parameters:
//   uniform                              -- U(0,1)
//   power            A (default 1), alpha -- F(w) = A w^alpha up to F = 1
//   linear_increasing                    -- f(w) = 2w on (0,1)
//   linear_decreasing                    -- f(w) = 2(1-w) on (0,1)
//   exponential      alpha               -- f(w) = alpha e^(-alpha w)
//   truncated_normal upsilon, sigma, b   -- normal restricted to (0,b)
//   log_reciprocal   wbar (< 1)          -- F(w) = log(wbar)/log(w) on (0,wbar)
//   sine_squared     wbar                -- f(w) ∝ sin^2(1/w) on (0,wbar)
DistPtr make_builtin(const std::string& name, const std::map<std::string, double>& params = {});

// Beta-weighted mixture; weights must be positive and sum to 1 within 1e-12.
DistPtr make_mixture(const std::vector<std::pair<double, DistPtr>>& components);

// Draw one weight with law F via the quantile transform.
double sample_weight(const WeightDistribution& dist, Rng& rng);

// Direct constructors, convenient for tests and benchmarks.
DistPtr uniform01();
DistPtr power_dist(double A, double alpha);
DistPtr linear_increasing();
DistPtr linear_decreasing();
DistPtr exponential_dist(double alpha);
DistPtr truncated_normal(double upsilon, double sigma, double b);
DistPtr log_reciprocal(double wbar);
DistPtr sine_squared(double wbar);

}  // namespace knapsack
