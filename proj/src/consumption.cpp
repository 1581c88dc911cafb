#include "knapsack/consumption.hpp"

#include <cmath>
#include <limits>

#include "knapsack/errors.hpp"
#include "knapsack/quadrature.hpp"

namespace knapsack {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const ConsumptionQuery& q) {
    if (q.remaining_periods < 1) throw InvalidParameter("consumption: k must be >= 1");
    if (!(q.arrival_prob > 0.0) || q.arrival_prob > 1.0)
        throw InvalidParameter("consumption: p must lie in (0,1]");
    if (!(q.capacity >= 0.0) || !std::isfinite(q.capacity))
        throw InvalidParameter("consumption: x must be finite and >= 0");
}

}  // namespace

double epsilon(const ConsumptionQuery& q) {
    validate(q);
    if (q.capacity == 0.0) return 0.0;
    const double kp = static_cast<double>(q.remaining_periods) * q.arrival_prob;
    const double y = q.capacity / kp;
    const double mu = q.dist.mean();
    if (y > mu) return kInf;
    // y == mu with unbounded support has no finite root either.
    if (y >= mu && !std::isfinite(q.dist.support_hi())) return kInf;
    return q.dist.partial_moment_inverse(y);
}

double epsilon_derivative(const ConsumptionQuery& q) {
    validate(q);
    const double kp = static_cast<double>(q.remaining_periods) * q.arrival_prob;
    if (!(q.capacity > 0.0) || !(q.capacity < kp * q.dist.mean()))
        throw InvalidParameter("epsilon_derivative requires 0 < x < k*p*mean");
    const double eps = epsilon(q);
    const double f = q.dist.density(eps);
    if (!(f > 0.0))
        throw DegenerateDensity("epsilon_derivative: density vanishes at epsilon");
    return 1.0 / (kp * eps * f);
}

double heuristic_threshold(const ConsumptionQuery& q) {
    validate(q);
    const double eps = epsilon(q);
    return std::min(q.capacity, eps);
}

int compute_K(const WeightDistribution& dist, double c, double p) {
    if (!(p > 0.0) || p > 1.0) throw InvalidParameter("compute_K: p must lie in (0,1]");
    if (!(c >= 0.0)) throw InvalidParameter("compute_K: c must be >= 0");
    const auto tp = dist.typical_params();
    if (!tp) throw MissingTypicalParams("compute_K: distribution declares no w_bar");
    const double denom = p * dist.partial_moment(tp->w_bar);
    if (!(denom > 0.0)) throw DegeneratePartialMoment("compute_K: partial_moment(w_bar) = 0");
    const double k = std::ceil(c / denom);
    return k < 1.0 ? 1 : static_cast<int>(k);
}

std::vector<double> epsilon_grid(const WeightDistribution& dist, int k, double p, double step,
                                 int num_points) {
    if (k < 1) throw InvalidParameter("epsilon_grid: k must be >= 1");
    std::vector<double> out(static_cast<std::size_t>(num_points));
    if (num_points <= 0) return out;
    out[0] = 0.0;
    const double kp = static_cast<double>(k) * p;
    const double mu = dist.mean();
    const double hi_support = dist.support_hi();
    const bool bounded = std::isfinite(hi_support);

    const auto pm = [&dist](double e) { return dist.partial_moment(e); };
    const auto dpm = [&dist](double e) { return e * dist.density(e); };

    double prev = 0.0;
    for (int j = 1; j < num_points; ++j) {
        const double y = (static_cast<double>(j) * step) / kp;
        if (y > mu || (y >= mu && !bounded)) {
            // y is increasing in j, so every later point overflows as well.
            for (int i = j; i < num_points; ++i) out[i] = kInf;
            return out;
        }
        // The roots increase with j; Newton from the previous root converges
        // in a couple of steps on smooth densities. Fall back to a bracketed
        // solve when it strays.
        double x = std::max(prev, 1e-300);
        bool ok = false;
        for (int it = 0; it < 8; ++it) {
            const double d = dpm(x);
            if (!(d > 0.0)) break;
            const double stepn = (pm(x) - y) / d;
            const double nx = x - stepn;
            if (!(nx >= prev) || (bounded && nx > hi_support)) break;
            x = nx;
            if (std::fabs(stepn) < 1e-13) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            double hi = bounded ? hi_support : std::max(2.0 * std::max(prev, step), 1.0);
            if (!bounded) {
                while (pm(hi) < y) hi *= 2.0;
            }
            x = invert_monotone(pm, dpm, y, prev, hi, 1e-13);
        }
        prev = x;
        out[j] = x;
    }
    return out;
}

}  // namespace knapsack
