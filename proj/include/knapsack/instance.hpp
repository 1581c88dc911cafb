#pragma once

#include <vector>

#include "knapsack/distribution.hpp"

namespace knapsack {

// Arrival process over one period. probs[0] is the no-arrival probability;
// probs[j] for j >= 1 is the arrival probability of a type-j item. A Bernoulli
// process is the two-entry case {1-p, p}.
struct ArrivalModel {
    std::vector<double> probs;

    static ArrivalModel bernoulli(double p);
    static ArrivalModel multinomial(std::vector<double> probs_with_p0_first);

    double arrival_prob() const { return 1.0 - probs[0]; }
    int num_types() const { return static_cast<int>(probs.size()) - 1; }
};

// One problem configuration: horizon, capacity, per-item reward, arrival
// process, and one weight law per type.
struct KnapsackInstance {
    int n;
    double c;
    double r;
    ArrivalModel arrivals;
    std::vector<DistPtr> dists;

    KnapsackInstance(int n, double c, double r, ArrivalModel arrivals, std::vector<DistPtr> dists);

    static KnapsackInstance bernoulli(int n, double c, double p, double r, DistPtr dist);

    double p() const { return arrivals.arrival_prob(); }
    const WeightDistribution& dist() const { return *dists.front(); }

    // Conditional weight law given an arrival: the single distribution for a
    // Bernoulli process, the p_j/(1-p0)-weighted mixture otherwise.
    DistPtr conditional_mixture() const;
};

}  // namespace knapsack
