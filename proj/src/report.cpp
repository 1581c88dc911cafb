#include "knapsack/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "knapsack/csv.hpp"
#include "knapsack/dp.hpp"
#include "knapsack/errors.hpp"
#include "knapsack/heuristic.hpp"
#include "knapsack/offline.hpp"

namespace knapsack {

RegretReport build_regret_report(const ReportConfig& cfg) {
    if (!cfg.dist) throw InvalidParameter("regret report: no distribution");
    if (cfg.n_list.empty()) throw InvalidParameter("regret report: empty n list");
    std::vector<int> ns = cfg.n_list;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    if (ns.front() < 1) throw InvalidParameter("regret report: n values must be >= 1");

    const int n_max = ns.back();
    const KnapsackInstance inst =
        KnapsackInstance::bernoulli(n_max, cfg.c, cfg.p, cfg.r, cfg.dist);
    GridOptions opts;
    opts.grid_step = cfg.grid_step;

    const ValueGrid hat = value_recursion_heuristic(inst, opts);
    const ValueGrid star = bellman_optimal(inst, opts);

    RegretReport report;
    report.rows.reserve(ns.size());
    for (int n : ns) {
        const KnapsackInstance inst_n =
            KnapsackInstance::bernoulli(n, cfg.c, cfg.p, cfg.r, cfg.dist);
        RegretRow row;
        row.n = n;
        row.prophet_bound = prophet_upper_bound(inst_n);
        row.v_star = star.value_at_capacity[static_cast<std::size_t>(n)];
        row.v_hat = hat.value_at_capacity[static_cast<std::size_t>(n)];
        const MonteCarloEstimate mc = estimate_offline_mean(inst_n, cfg.trials, cfg.seed);
        row.mc_offline_mean = mc.mean;
        row.mc_stderr = mc.std_error;
        row.regret_bound_star = row.prophet_bound - row.v_star;
        row.regret_bound_hat = row.prophet_bound - row.v_hat;
        row.gap = row.v_star - row.v_hat;
        if (n > 1) {
            const double ln = std::log(static_cast<double>(n));
            row.scaled_star = row.regret_bound_star / ln;
            row.scaled_hat = row.regret_bound_hat / ln;
        } else {
            row.scaled_star = std::numeric_limits<double>::quiet_NaN();
            row.scaled_hat = std::numeric_limits<double>::quiet_NaN();
        }
        report.rows.push_back(row);
    }
    return report;
}

void write_regret_csv(const RegretReport& report, std::ostream& os) {
    os << "n,prophet_bound,v_star,v_hat,mc_offline_mean,mc_stderr,"
          "regret_bound_star,regret_bound_hat,gap,scaled_star,scaled_hat\n";
    for (const RegretRow& row : report.rows) {
        os << row.n << ',' << csv_double(row.prophet_bound) << ',' << csv_double(row.v_star) << ','
           << csv_double(row.v_hat) << ',' << csv_double(row.mc_offline_mean) << ','
           << csv_double(row.mc_stderr) << ',' << csv_double(row.regret_bound_star) << ','
           << csv_double(row.regret_bound_hat) << ',' << csv_double(row.gap) << ',';
        if (std::isnan(row.scaled_star))
            os << ',';
        else
            os << csv_double(row.scaled_star) << ',';
        if (!std::isnan(row.scaled_hat)) os << csv_double(row.scaled_hat);
        os << '\n';
    }
}

}  // namespace knapsack
