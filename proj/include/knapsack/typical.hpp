#pragma once

#include <vector>

#include "knapsack/distribution.hpp"

namespace knapsack {

// Diagnostics for the two defining conditions of the typical class, evaluated
// on a geometric probe grid over (w_bar * 1e-8, w_bar). A pass means "no
// violation at any probe"; the conditions themselves quantify over a
// continuum.
struct TypicalReport {
    bool condition_i_pass = false;   // F(lambda w) / F(w) <= gamma at all probes
    double worst_cdf_ratio = 0.0;
    double lambda_used = 0.0;
    double gamma_used = 0.0;

    bool condition_ii_pass = false;  // w^3 f(w) non-decreasing along probes
    double worst_monotonicity_violation = 0.0;  // largest observed decrease

    double lemma2_m = 0.0;  // sup of w F(w) / partial_moment(w) over probes

    std::vector<double> probe_grid;
};

// Both conditions with explicit parameters. Condition (ii) allows an absolute
// slack of 1e-12 between consecutive probes; condition (i) the same slack on
// the ratio.
TypicalReport check_typical(const WeightDistribution& dist, double lambda, double gamma,
                            double w_bar, int probe_count = 4096);

// Parameter-free variant: uses the distribution's declared constants where
// present; otherwise searches lambda in {0.1,...,0.9} for the smallest
// empirical gamma and passes condition (i) iff that gamma is at most 0.85.
TypicalReport check_typical(const WeightDistribution& dist, int probe_count = 4096);

// sup over the probe grid of w F(w) / ∫_0^w u dF(u). Throws
// DegeneratePartialMoment when the partial moment vanishes at a probe.
double lemma2_M(const WeightDistribution& dist, double w_bar, int probe_count = 4096);

}  // namespace knapsack
