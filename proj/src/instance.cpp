#include "knapsack/instance.hpp"

#include <cmath>

#include "knapsack/errors.hpp"

namespace knapsack {

ArrivalModel ArrivalModel::bernoulli(double p) {
    if (!(p > 0.0) || p > 1.0)
        throw InvalidProbabilities("Bernoulli arrival probability must lie in (0,1]");
    return ArrivalModel{{1.0 - p, p}};
}

ArrivalModel ArrivalModel::multinomial(std::vector<double> probs_with_p0_first) {
    if (probs_with_p0_first.size() < 2)
        throw InvalidProbabilities("multinomial arrivals need at least one item type");
    double total = 0.0;
    for (std::size_t j = 0; j < probs_with_p0_first.size(); ++j) {
        const double pj = probs_with_p0_first[j];
        if (pj < 0.0 || pj > 1.0)
            throw InvalidProbabilities("arrival probabilities must lie in [0,1]");
        if (j >= 1 && !(pj > 0.0))
            throw InvalidProbabilities("item-type probabilities must be positive");
        total += pj;
    }
    if (std::fabs(total - 1.0) > 1e-12)
        throw InvalidProbabilities("arrival probabilities must sum to 1");
    return ArrivalModel{std::move(probs_with_p0_first)};
}

KnapsackInstance::KnapsackInstance(int n_, double c_, double r_, ArrivalModel arrivals_,
                                   std::vector<DistPtr> dists_)
    : n(n_), c(c_), r(r_), arrivals(std::move(arrivals_)), dists(std::move(dists_)) {
    if (n < 0) throw InvalidParameter("horizon n must be non-negative");
    if (!(c >= 0.0)) throw InvalidParameter("capacity c must be >= 0");
    if (!(r > 0.0)) throw InvalidParameter("reward r must be > 0");
    if (static_cast<int>(dists.size()) != arrivals.num_types())
        throw InvalidParameter("one weight distribution required per item type");
    for (const auto& d : dists)
        if (!d) throw InvalidParameter("null weight distribution");
}

KnapsackInstance KnapsackInstance::bernoulli(int n, double c, double p, double r, DistPtr dist) {
    return KnapsackInstance(n, c, r, ArrivalModel::bernoulli(p), {std::move(dist)});
}

DistPtr KnapsackInstance::conditional_mixture() const {
    if (dists.size() == 1) return dists.front();
    const double scale = 1.0 / arrivals.arrival_prob();
    std::vector<std::pair<double, DistPtr>> comps;
    comps.reserve(dists.size());
    for (std::size_t j = 0; j < dists.size(); ++j)
        comps.emplace_back(arrivals.probs[j + 1] * scale, dists[j]);
    return make_mixture(comps);
}

}  // namespace knapsack
