#include "knapsack/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "knapsack/consumption.hpp"
#include "knapsack/errors.hpp"

namespace knapsack {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<int> retained_list(const GridOptions& opts, int n) {
    std::vector<int> keep = opts.retain_steps;
    keep.push_back(n);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    keep.erase(std::remove_if(keep.begin(), keep.end(), [n](int k) { return k < 0 || k > n; }),
               keep.end());
    return keep;
}

}  // namespace

TrajectoryRecord simulate_heuristic(const KnapsackInstance& inst, const SamplePath& path) {
    if (static_cast<int>(path.weights.size()) != inst.n)
        throw InvalidParameter("simulate_heuristic: path length != horizon");
    const DistPtr mix = inst.conditional_mixture();
    const double p = inst.p();
    TrajectoryRecord rec;
    rec.steps.resize(static_cast<std::size_t>(inst.n));
    double x = inst.c;
    for (int i = 0; i < inst.n; ++i) {
        auto& step = rec.steps[static_cast<std::size_t>(i)];
        const double w = path.weights[static_cast<std::size_t>(i)];
        step.arrived = std::isfinite(w);
        step.weight = w;
        step.threshold = heuristic_threshold({*mix, inst.n - i, p, x});
        step.accepted = step.arrived && w <= step.threshold;
        if (step.accepted) {
            x -= w;
            if (x < 0.0) x = 0.0;  // threshold <= x keeps this a no-op up to rounding
            rec.total_reward += inst.r;
        }
        step.remaining = x;
    }
    return rec;
}

TrajectoryRecord simulate_heuristic(const KnapsackInstance& inst, std::uint64_t seed,
                                    std::uint64_t trial) {
    return simulate_heuristic(inst, generate_path(inst, seed, trial));
}

ValueGrid value_recursion_heuristic(const KnapsackInstance& inst, const GridOptions& opts) {
    const GridSpec spec = make_grid_spec(inst.c, opts.grid_step);
    const DistPtr mix = inst.conditional_mixture();
    const double p = inst.p();

    ValueGrid grid;
    grid.grid_step = spec.step;
    grid.capacity = spec.capacity;
    grid.horizon = inst.n;
    grid.retained_steps = retained_list(opts, inst.n);
    grid.values.resize(grid.retained_steps.size());
    grid.thresholds.resize(grid.retained_steps.size());
    grid.value_at_capacity.assign(static_cast<std::size_t>(inst.n) + 1, 0.0);
    grid.max_residual.assign(static_cast<std::size_t>(inst.n) + 1, 0.0);

    const int G = spec.num_points;
    std::vector<double> prev(static_cast<std::size_t>(G), 0.0);
    std::vector<double> next(static_cast<std::size_t>(G), 0.0);
    std::vector<double> h(static_cast<std::size_t>(G), 0.0);
    grid::StepEngine engine(*mix, spec, p, inst.r);

    auto store_if_retained = [&](int k, const std::vector<double>& vals,
                                 const std::vector<double>& thr) {
        for (std::size_t row = 0; row < grid.retained_steps.size(); ++row) {
            if (grid.retained_steps[row] == k) {
                grid.values[row] = vals;
                grid.thresholds[row] = thr;
            }
        }
    };
    store_if_retained(0, prev, h);

    const double r = inst.r;
    for (int k = 1; k <= inst.n; ++k) {
        const std::vector<double> eps = epsilon_grid(*mix, k, p, spec.step, G);
        for (int j = 0; j < G; ++j) {
            const double xj = j * spec.step;
            h[static_cast<std::size_t>(j)] = std::min(xj, eps[static_cast<std::size_t>(j)]);
        }
        engine.set_row(prev);
        const double kpr = static_cast<double>(k) * p * r;
        double rho_max = 0.0;
        for (int j = 0; j < G; ++j) {
            const double vj = engine.step_value(j, h[static_cast<std::size_t>(j)]);
            next[static_cast<std::size_t>(j)] = vj;
            const double e = eps[static_cast<std::size_t>(j)];
            const double bound = kpr * (std::isfinite(e) ? mix->cdf(e) : 1.0);
            rho_max = std::max(rho_max, bound - vj);
        }
        grid.max_residual[static_cast<std::size_t>(k)] = rho_max;
        grid.value_at_capacity[static_cast<std::size_t>(k)] = next.back();
        store_if_retained(k, next, h);
        std::swap(prev, next);
    }
    return grid;
}

ResidualReport residual_report(const KnapsackInstance& inst, const ValueGrid& grid) {
    if (grid.max_residual.empty())
        throw InvalidParameter("residual_report: grid was not produced by the heuristic recursion");
    const DistPtr mix = inst.conditional_mixture();
    const double p = inst.p();
    ResidualReport rep;
    rep.max_residual = grid.max_residual;
    rep.retained_steps = grid.retained_steps;
    rep.residuals.resize(grid.retained_steps.size());
    for (std::size_t row = 0; row < grid.retained_steps.size(); ++row) {
        const int k = grid.retained_steps[row];
        const auto& vals = grid.values[row];
        auto& rho = rep.residuals[row];
        rho.assign(vals.size(), 0.0);
        if (k == 0) continue;
        const std::vector<double> eps =
            epsilon_grid(*mix, k, p, grid.grid_step, static_cast<int>(vals.size()));
        const double kpr = static_cast<double>(k) * p * inst.r;
        for (std::size_t j = 0; j < vals.size(); ++j) {
            const double e = eps[j];
            rho[j] = kpr * (std::isfinite(e) ? mix->cdf(e) : 1.0) - vals[j];
        }
    }
    return rep;
}

}  // namespace knapsack
