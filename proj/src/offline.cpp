#include "knapsack/offline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "knapsack/consumption.hpp"
#include "knapsack/errors.hpp"
#include "knapsack/parallel.hpp"
#include "knapsack/rng.hpp"

namespace knapsack {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

bool fits_capacity(double sum, double c) {
    return sum <= c + 1e-12 * std::max(1.0, c);
}

SamplePath generate_path(const KnapsackInstance& inst, std::uint64_t seed, std::uint64_t trial) {
    Rng rng(seed, trial);
    SamplePath path;
    path.seed = seed;
    path.weights.resize(static_cast<std::size_t>(inst.n), kInf);
    const auto& probs = inst.arrivals.probs;
    const bool certain_arrival = probs[0] == 0.0;
    const bool single_type = inst.arrivals.num_types() == 1;
    for (int i = 0; i < inst.n; ++i) {
        int type = 0;
        if (single_type) {
            if (certain_arrival || rng.uniform01() < probs[1]) type = 1;
        } else {
            double u = rng.uniform01();
            for (std::size_t j = 1; j < probs.size(); ++j) {
                u -= probs[j];
                if (u < 0.0) {
                    type = static_cast<int>(j);
                    break;
                }
            }
        }
        if (type >= 1)
            path.weights[static_cast<std::size_t>(i)] =
                inst.dists[static_cast<std::size_t>(type - 1)]->quantile(rng.uniform01());
    }
    return path;
}

OfflineResult offline_sort(const SamplePath& path, double c, double r) {
    const int n = static_cast<int>(path.weights.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double wa = path.weights[static_cast<std::size_t>(a)];
        const double wb = path.weights[static_cast<std::size_t>(b)];
        if (wa != wb) return wa < wb;
        return a < b;
    });
    OfflineResult res;
    double total = 0.0;
    for (int idx : order) {
        const double w = path.weights[static_cast<std::size_t>(idx)];
        if (!std::isfinite(w) || !fits_capacity(total + w, c)) break;
        total += w;
        res.selected_indices.push_back(idx);
    }
    res.count = static_cast<int>(res.selected_indices.size());
    res.reward = r * res.count;
    return res;
}

double leave_one_out_threshold(const SamplePath& path, int item, double c) {
    const int n = static_cast<int>(path.weights.size());
    if (item < 0 || item >= n) throw InvalidParameter("leave_one_out_threshold: item out of range");
    std::vector<double> rest;
    rest.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i)
        if (i != item) rest.push_back(path.weights[static_cast<std::size_t>(i)]);
    std::sort(rest.begin(), rest.end());
    double prefix = 0.0;
    int tau = 0;
    for (double w : rest) {
        if (!std::isfinite(w) || !fits_capacity(prefix + w, c)) break;
        prefix += w;
        ++tau;
    }
    const double top = tau > 0 ? rest[static_cast<std::size_t>(tau - 1)] : 0.0;
    return std::max(top, c - prefix);
}

double prophet_upper_bound(const KnapsackInstance& inst) {
    if (inst.n == 0) return 0.0;
    const DistPtr mix = inst.conditional_mixture();
    const double p = inst.p();
    const double eps = epsilon({*mix, inst.n, p, inst.c});
    const double F = std::isfinite(eps) ? mix->cdf(eps) : 1.0;
    return static_cast<double>(inst.n) * p * inst.r * F;
}

double rhee_talagrand_bound(const WeightDistribution& dist, int n, double c) {
    const double eps = epsilon({dist, n, 1.0, c});
    if (!std::isfinite(eps))
        throw InvalidParameter("rhee_talagrand_bound requires a finite consumption threshold");
    const double ratio = eps / c;
    return static_cast<double>(n) * dist.cdf(eps) * (1.0 - std::sqrt(ratio) - ratio);
}

MonteCarloEstimate estimate_offline_mean(const KnapsackInstance& inst, long trials,
                                         std::uint64_t seed) {
    if (trials < 1) throw InvalidParameter("estimate_offline_mean: trials must be >= 1");
    std::vector<double> rewards(static_cast<std::size_t>(trials));
    parallel_for(trials, [&](std::int64_t lo, std::int64_t hi) {
        std::vector<double> buf;
        for (std::int64_t t = lo; t < hi; ++t) {
            Rng rng(seed, static_cast<std::uint64_t>(t));
            buf.clear();
            const auto& probs = inst.arrivals.probs;
            const bool certain = probs[0] == 0.0;
            const bool single = inst.arrivals.num_types() == 1;
            for (int i = 0; i < inst.n; ++i) {
                int type = 0;
                if (single) {
                    if (certain || rng.uniform01() < probs[1]) type = 1;
                } else {
                    double u = rng.uniform01();
                    for (std::size_t j = 1; j < probs.size(); ++j) {
                        u -= probs[j];
                        if (u < 0.0) {
                            type = static_cast<int>(j);
                            break;
                        }
                    }
                }
                if (type >= 1)
                    buf.push_back(inst.dists[static_cast<std::size_t>(type - 1)]->quantile(
                        rng.uniform01()));
            }
            std::sort(buf.begin(), buf.end());
            double total = 0.0;
            int count = 0;
            for (double w : buf) {
                if (!fits_capacity(total + w, inst.c)) break;
                total += w;
                ++count;
            }
            rewards[static_cast<std::size_t>(t)] = inst.r * count;
        }
    });
    // Reduce sequentially in trial order so the result is independent of the
    // thread partition.
    double sum = 0.0;
    for (double x : rewards) sum += x;
    const double mean = sum / static_cast<double>(trials);
    double ss = 0.0;
    for (double x : rewards) ss += (x - mean) * (x - mean);
    MonteCarloEstimate est;
    est.mean = mean;
    est.trials = trials;
    est.std_error =
        trials > 1 ? std::sqrt(ss / (static_cast<double>(trials) * (trials - 1.0))) : 0.0;
    return est;
}

}  // namespace knapsack
