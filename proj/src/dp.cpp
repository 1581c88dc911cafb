#include "knapsack/dp.hpp"

#include <algorithm>
#include <memory>
#include <ostream>

#include "knapsack/csv.hpp"
#include "knapsack/errors.hpp"

namespace knapsack {

namespace {

std::vector<int> retained_list(const GridOptions& opts, int n) {
    std::vector<int> keep = opts.retain_steps;
    keep.push_back(n);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    keep.erase(std::remove_if(keep.begin(), keep.end(), [n](int k) { return k < 0 || k > n; }),
               keep.end());
    return keep;
}

ValueGrid init_grid(const GridSpec& spec, int n, const GridOptions& opts) {
    ValueGrid grid;
    grid.grid_step = spec.step;
    grid.capacity = spec.capacity;
    grid.horizon = n;
    grid.retained_steps = retained_list(opts, n);
    grid.values.resize(grid.retained_steps.size());
    grid.thresholds.resize(grid.retained_steps.size());
    grid.value_at_capacity.assign(static_cast<std::size_t>(n) + 1, 0.0);
    return grid;
}

void store_if_retained(ValueGrid& grid, int k, const std::vector<double>& vals,
                       const std::vector<double>& thr) {
    for (std::size_t row = 0; row < grid.retained_steps.size(); ++row) {
        if (grid.retained_steps[row] == k) {
            grid.values[row] = vals;
            grid.thresholds[row] = thr;
        }
    }
}

}  // namespace

ValueGrid bellman_optimal(const KnapsackInstance& inst, const GridOptions& opts) {
    const GridSpec spec = make_grid_spec(inst.c, opts.grid_step);
    const DistPtr mix = inst.conditional_mixture();
    const double p = inst.p();

    ValueGrid grid = init_grid(spec, inst.n, opts);
    const int G = spec.num_points;
    std::vector<double> prev(static_cast<std::size_t>(G), 0.0);
    std::vector<double> next(static_cast<std::size_t>(G), 0.0);
    std::vector<double> thr(static_cast<std::size_t>(G), 0.0);
    grid::StepEngine engine(*mix, spec, p, inst.r);

    store_if_retained(grid, 0, prev, thr);
    for (int k = 1; k <= inst.n; ++k) {
        engine.set_row(prev);
        for (int j = 0; j < G; ++j) {
            const double H = engine.optimal_threshold(j);
            thr[static_cast<std::size_t>(j)] = H;
            next[static_cast<std::size_t>(j)] = engine.step_value(j, H);
        }
        grid.value_at_capacity[static_cast<std::size_t>(k)] = next.back();
        store_if_retained(grid, k, next, thr);
        std::swap(prev, next);
    }
    return grid;
}

MultiTypeGrid bellman_multitype(const KnapsackInstance& inst, const GridOptions& opts) {
    const int J = inst.arrivals.num_types();
    const GridSpec spec = make_grid_spec(inst.c, opts.grid_step);
    const auto& probs = inst.arrivals.probs;

    MultiTypeGrid out;
    out.average = init_grid(spec, inst.n, opts);
    out.type_values.resize(out.average.retained_steps.size());
    out.type_thresholds.resize(out.average.retained_steps.size());

    const int G = spec.num_points;
    std::vector<double> prev(static_cast<std::size_t>(G), 0.0);
    std::vector<double> next(static_cast<std::size_t>(G), 0.0);
    std::vector<double> thr(static_cast<std::size_t>(G), 0.0);
    std::vector<std::vector<double>> type_vals(
        static_cast<std::size_t>(J), std::vector<double>(static_cast<std::size_t>(G), 0.0));

    // Per-type engines integrate against F_j with unit probability; the
    // no-arrival weight p0 re-enters through the average below.
    std::vector<std::unique_ptr<grid::StepEngine>> engines;
    engines.reserve(static_cast<std::size_t>(J));
    for (int j = 0; j < J; ++j)
        engines.push_back(std::make_unique<grid::StepEngine>(*inst.dists[static_cast<std::size_t>(j)],
                                                             spec, 1.0, inst.r));

    auto store_rows = [&](int k) {
        for (std::size_t row = 0; row < out.average.retained_steps.size(); ++row) {
            if (out.average.retained_steps[row] != k) continue;
            out.average.values[row] = (k == 0) ? prev : next;
            out.average.thresholds[row] = thr;
            out.type_values[row] = type_vals;
            out.type_thresholds[row].assign(static_cast<std::size_t>(J), thr);
        }
    };
    store_rows(0);

    for (int k = 1; k <= inst.n; ++k) {
        for (auto& e : engines) e->set_row(prev);
        for (int i = 0; i < G; ++i) {
            // The acceptance condition compares type-independent rewards-to-go,
            // so any type's engine extracts the same threshold.
            const double H = engines.front()->optimal_threshold(i);
            thr[static_cast<std::size_t>(i)] = H;
            double avg = probs[0] * prev[static_cast<std::size_t>(i)];
            for (int j = 0; j < J; ++j) {
                const double vj = engines[static_cast<std::size_t>(j)]->step_value(i, H);
                type_vals[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = vj;
                avg += probs[static_cast<std::size_t>(j) + 1] * vj;
            }
            next[static_cast<std::size_t>(i)] = avg;
        }
        out.average.value_at_capacity[static_cast<std::size_t>(k)] = next.back();
        store_rows(k);
        std::swap(prev, next);
    }
    return out;
}

void write_multitype_csv(const MultiTypeGrid& grid, std::ostream& os) {
    os << "k,x,value,threshold,type\n";
    for (std::size_t row = 0; row < grid.average.retained_steps.size(); ++row) {
        const int k = grid.average.retained_steps[row];
        for (std::size_t j = 0; j < grid.type_values[row].size(); ++j) {
            const auto& vals = grid.type_values[row][j];
            const auto& thrs = grid.type_thresholds[row][j];
            for (std::size_t i = 0; i < vals.size(); ++i) {
                os << k << ',' << csv_double(grid.average.x_at(static_cast<int>(i))) << ','
                   << csv_double(vals[i]) << ',' << csv_double(thrs[i]) << ',' << (j + 1) << '\n';
            }
        }
    }
}

double optimality_gap(const KnapsackInstance& inst, double grid_step) {
    if (inst.n == 0) return 0.0;
    GridOptions opts;
    opts.grid_step = grid_step;
    const ValueGrid star = bellman_optimal(inst, opts);
    const ValueGrid hat = value_recursion_heuristic(inst, opts);
    return star.value_at_capacity.back() - hat.value_at_capacity.back();
}

}  // namespace knapsack
