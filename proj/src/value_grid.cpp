#include "knapsack/value_grid.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "knapsack/csv.hpp"
#include "knapsack/errors.hpp"

namespace knapsack {

GridSpec make_grid_spec(double c, double grid_step) {
    if (!(c >= 0.0)) throw InvalidParameter("grid: capacity must be >= 0");
    if (c == 0.0) return GridSpec{grid_step > 0.0 ? grid_step : 1.0, 1, 0.0};
    if (!(grid_step > 0.0)) throw InvalidParameter("grid: step must be > 0");
    if (grid_step > c / 10.0) throw GridTooCoarse("grid step exceeds c/10");
    const int cells = static_cast<int>(std::ceil(c / grid_step - 1e-9));
    return GridSpec{grid_step, cells + 1, cells * grid_step};
}

const std::vector<double>* ValueGrid::row_values(int k) const {
    for (std::size_t i = 0; i < retained_steps.size(); ++i)
        if (retained_steps[i] == k) return &values[i];
    return nullptr;
}

const std::vector<double>* ValueGrid::row_thresholds(int k) const {
    for (std::size_t i = 0; i < retained_steps.size(); ++i)
        if (retained_steps[i] == k) return &thresholds[i];
    return nullptr;
}

void write_grid_csv(const ValueGrid& grid, std::ostream& os) {
    os << "k,x,value,threshold\n";
    for (std::size_t row = 0; row < grid.retained_steps.size(); ++row) {
        const int k = grid.retained_steps[row];
        for (std::size_t j = 0; j < grid.values[row].size(); ++j) {
            os << k << ',' << csv_double(grid.x_at(static_cast<int>(j))) << ','
               << csv_double(grid.values[row][j]) << ',' << csv_double(grid.thresholds[row][j])
               << '\n';
        }
    }
}

namespace grid {

StepEngine::StepEngine(const WeightDistribution& dist, const GridSpec& spec, double p, double r)
    : dist_(dist), spec_(spec), p_(p), r_(r), support_hi_(dist.support_hi()) {
    if (const auto aff = dist.affine_density()) {
        affine_ = true;
        aff_a_ = aff->intercept;
        aff_b_ = aff->slope;
    } else {
        cell_mass_.resize(static_cast<std::size_t>(std::max(0, spec_.num_points - 1)));
        for (int j = 0; j + 1 < spec_.num_points; ++j)
            cell_mass_[static_cast<std::size_t>(j)] =
                dist_.cdf((j + 1) * spec_.step) - dist_.cdf(j * spec_.step);
    }
}

void StepEngine::set_row(const std::vector<double>& prev) {
    prev_ = &prev;
    if (!affine_) return;
    const int n = spec_.num_points;
    cum_v_.assign(static_cast<std::size_t>(n), 0.0);
    cum_yv_.assign(static_cast<std::size_t>(n), 0.0);
    const double d = spec_.step;
    for (int j = 0; j + 1 < n; ++j) {
        const double v0 = prev[static_cast<std::size_t>(j)];
        const double v1 = prev[static_cast<std::size_t>(j + 1)];
        const double s = (v1 - v0) / d;
        const double xj = j * d;
        cum_v_[static_cast<std::size_t>(j + 1)] =
            cum_v_[static_cast<std::size_t>(j)] + d * 0.5 * (v0 + v1);
        // ∫ y v(y) dy over the cell with v linear: exact cubic.
        cum_yv_[static_cast<std::size_t>(j + 1)] =
            cum_yv_[static_cast<std::size_t>(j)] +
            xj * v0 * d + (xj * s + v0) * d * d * 0.5 + s * d * d * d / 3.0;
    }
}

double StepEngine::prev_at(double x) const {
    const auto& v = *prev_;
    if (x <= 0.0) return v.front();
    const double pos = x / spec_.step;
    int j = static_cast<int>(pos);
    if (j >= spec_.num_points - 1) return v.back();
    const double frac = pos - j;
    return v[static_cast<std::size_t>(j)] * (1.0 - frac) + v[static_cast<std::size_t>(j + 1)] * frac;
}

double StepEngine::cum_v_at(double t) const {
    if (t <= 0.0) return 0.0;
    const auto& v = *prev_;
    const double pos = t / spec_.step;
    int j = static_cast<int>(pos);
    if (j >= spec_.num_points - 1) return cum_v_.back();
    const double tau = t - j * spec_.step;
    const double s = (v[static_cast<std::size_t>(j + 1)] - v[static_cast<std::size_t>(j)]) / spec_.step;
    return cum_v_[static_cast<std::size_t>(j)] + v[static_cast<std::size_t>(j)] * tau +
           0.5 * s * tau * tau;
}

double StepEngine::cum_yv_at(double t) const {
    if (t <= 0.0) return 0.0;
    const auto& v = *prev_;
    const double pos = t / spec_.step;
    int j = static_cast<int>(pos);
    if (j >= spec_.num_points - 1) return cum_yv_.back();
    const double tau = t - j * spec_.step;
    const double xj = j * spec_.step;
    const double v0 = v[static_cast<std::size_t>(j)];
    const double s = (v[static_cast<std::size_t>(j + 1)] - v0) / spec_.step;
    return cum_yv_[static_cast<std::size_t>(j)] + xj * v0 * tau + (xj * s + v0) * tau * tau * 0.5 +
           s * tau * tau * tau / 3.0;
}

double StepEngine::accept_integral(int i, double h) const {
    if (!(h > 0.0)) return 0.0;
    const double xi = i * spec_.step;
    if (h > xi) h = xi;
    if (affine_) {
        const double heff = std::min(h, support_hi_);
        const double lo = xi - heff;
        const double dv = cum_v_[static_cast<std::size_t>(i)] - cum_v_at(lo);
        if (aff_b_ == 0.0) return aff_a_ * dv;
        const double dyv = cum_yv_[static_cast<std::size_t>(i)] - cum_yv_at(lo);
        return (aff_a_ + aff_b_ * xi) * dv - aff_b_ * dyv;
    }
    const auto& v = *prev_;
    const double d = spec_.step;
    int full = static_cast<int>(h / d);
    if (full > i) full = i;
    // Trapezoid in v against exact cell masses; grid offsets land on grid.
    double acc = 0.0;
    for (int j = 0; j < full; ++j) {
        acc += cell_mass_[static_cast<std::size_t>(j)] *
               0.5 * (v[static_cast<std::size_t>(i - j)] + v[static_cast<std::size_t>(i - j - 1)]);
    }
    const double base = full * d;
    if (h > base) {
        const double part_mass = dist_.cdf(h) - dist_.cdf(base);
        acc += part_mass * 0.5 * (v[static_cast<std::size_t>(i - full)] + prev_at(xi - h));
    }
    return acc;
}

double StepEngine::step_value(int i, double h) const {
    const double Fh = dist_.cdf(h);
    const double vi = (*prev_)[static_cast<std::size_t>(i)];
    return (1.0 - p_ * Fh) * vi + p_ * (r_ * Fh + accept_integral(i, h));
}

double StepEngine::optimal_threshold(int i) const {
    if (i == 0) return 0.0;
    const auto& v = *prev_;
    const double vi = v[static_cast<std::size_t>(i)];
    // r + v(x_i - w) - v(x_i) is non-increasing in w; always >= 0 at w = 0.
    if (r_ + v[0] >= vi) return i * spec_.step;
    int lo = 0, hi = i;  // qualify(lo), !qualify(hi)
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (r_ + v[static_cast<std::size_t>(i - mid)] >= vi)
            lo = mid;
        else
            hi = mid;
    }
    const double va = v[static_cast<std::size_t>(i - lo)];
    const double vb = v[static_cast<std::size_t>(i - lo - 1)];
    double theta = 0.0;
    if (va > vb) theta = (r_ + va - vi) / (va - vb);
    if (theta > 1.0) theta = 1.0;
    if (theta < 0.0) theta = 0.0;
    return (lo + theta) * spec_.step;
}

}  // namespace grid

}  // namespace knapsack
