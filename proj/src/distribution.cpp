#include "knapsack/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "knapsack/errors.hpp"
#include "knapsack/quadrature.hpp"
#include "knapsack/special_functions.hpp"

namespace knapsack {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double std_normal_cdf(double z) { return 0.5 * std::erfc(-z * 0.7071067811865475244); }
double std_normal_pdf(double z) { return std::exp(-0.5 * z * z) * 0.3989422804014326779; }

}  // namespace

double WeightDistribution::partial_moment_inverse(double y) const {
    if (!(y > 0.0)) return 0.0;
    const double m = mean();
    if (y >= m) return support_hi();
    double hi = support_hi();
    if (!std::isfinite(hi)) {
        hi = 1.0;
        while (partial_moment(hi) < y) hi *= 2.0;
    }
    const auto pm = [this](double e) { return partial_moment(e); };
    const auto dpm = [this](double e) { return e * density(e); };
    return invert_monotone(pm, dpm, y, 0.0, hi, 1e-13);
}

double WeightDistribution::quantile(double u) const {
    if (!(u > 0.0)) return 0.0;
    if (u >= 1.0) return support_hi();
    double hi = support_hi();
    if (!std::isfinite(hi)) {
        hi = 1.0;
        while (cdf(hi) < u) hi *= 2.0;
    }
    const auto f = [this](double w) { return cdf(w); };
    const auto df = [this](double w) { return density(w); };
    return invert_monotone(f, df, u, 0.0, hi, 1e-14 * std::max(1.0, hi));
}

double sample_weight(const WeightDistribution& dist, Rng& rng) {
    return dist.quantile(rng.uniform01());
}

namespace {

// ---------------------------------------------------------------------------
// Built-in families
// ---------------------------------------------------------------------------

class Uniform01 final : public WeightDistribution {
  public:
    double cdf(double w) const override { return std::clamp(w, 0.0, 1.0); }
    double density(double w) const override { return (w > 0.0 && w < 1.0) ? 1.0 : 0.0; }
    double partial_moment(double eps) const override {
        const double e = std::clamp(eps, 0.0, 1.0);
        return 0.5 * e * e;
    }
    double mean() const override { return 0.5; }
    double support_hi() const override { return 1.0; }
    double partial_moment_inverse(double y) const override {
        if (!(y > 0.0)) return 0.0;
        if (y >= 0.5) return 1.0;
        return std::sqrt(2.0 * y);
    }
    double quantile(double u) const override { return std::clamp(u, 0.0, 1.0); }
    std::optional<TypicalParams> typical_params() const override {
        return TypicalParams{1.0, 0.5, 0.5};
    }
    std::optional<AffineDensity> affine_density() const override {
        return AffineDensity{1.0, 0.0};
    }
    std::string name() const override { return "uniform"; }
};

// F(w) = A w^alpha on (0, s) with s = A^(-1/alpha), extended by F = 1 beyond.
class PowerDist final : public WeightDistribution {
  public:
    PowerDist(double A, double alpha, std::string display_name)
        : A_(A), alpha_(alpha), s_(std::pow(A, -1.0 / alpha)), name_(std::move(display_name)) {
        if (!(A > 0.0) || !(alpha > 0.0))
            throw InvalidParameter("power distribution requires A > 0 and alpha > 0");
    }
    double cdf(double w) const override {
        if (w <= 0.0) return 0.0;
        if (w >= s_) return 1.0;
        return A_ * std::pow(w, alpha_);
    }
    double density(double w) const override {
        if (w <= 0.0 || w >= s_) return 0.0;
        return A_ * alpha_ * std::pow(w, alpha_ - 1.0);
    }
    double partial_moment(double eps) const override {
        const double e = std::clamp(eps, 0.0, s_);
        return A_ * alpha_ / (alpha_ + 1.0) * std::pow(e, alpha_ + 1.0);
    }
    double mean() const override { return alpha_ * s_ / (alpha_ + 1.0); }
    double support_hi() const override { return s_; }
    double partial_moment_inverse(double y) const override {
        if (!(y > 0.0)) return 0.0;
        if (y >= mean()) return s_;
        return std::pow((alpha_ + 1.0) * y / (A_ * alpha_), 1.0 / (alpha_ + 1.0));
    }
    double quantile(double u) const override {
        if (!(u > 0.0)) return 0.0;
        if (u >= 1.0) return s_;
        return std::pow(u / A_, 1.0 / alpha_);
    }
    std::optional<TypicalParams> typical_params() const override {
        return TypicalParams{s_, 0.5, std::pow(0.5, alpha_)};
    }
    std::optional<AffineDensity> affine_density() const override {
        if (alpha_ == 1.0) return AffineDensity{A_, 0.0};
        if (alpha_ == 2.0) return AffineDensity{0.0, 2.0 * A_};
        return std::nullopt;
    }
    std::string name() const override { return name_; }

  private:
    double A_, alpha_, s_;
    std::string name_;
};

// f(w) = 2(1 - w) on (0,1).
class LinearDecreasing final : public WeightDistribution {
  public:
    double cdf(double w) const override {
        const double v = std::clamp(w, 0.0, 1.0);
        return v * (2.0 - v);
    }
    double density(double w) const override {
        return (w > 0.0 && w < 1.0) ? 2.0 * (1.0 - w) : 0.0;
    }
    double partial_moment(double eps) const override {
        const double e = std::clamp(eps, 0.0, 1.0);
        return e * e * (1.0 - 2.0 * e / 3.0);
    }
    double mean() const override { return 1.0 / 3.0; }
    double support_hi() const override { return 1.0; }
    double quantile(double u) const override {
        if (!(u > 0.0)) return 0.0;
        if (u >= 1.0) return 1.0;
        return 1.0 - std::sqrt(1.0 - u);
    }
    std::optional<TypicalParams> typical_params() const override {
        // w^3 f(w) is non-decreasing up to 3/4; the cdf ratio at lambda=1/2
        // peaks at w = 3/4 with value 0.65.
        return TypicalParams{0.75, 0.5, 0.65};
    }
    std::optional<AffineDensity> affine_density() const override {
        return AffineDensity{2.0, -2.0};
    }
    std::string name() const override { return "linear_decreasing"; }
};

class Exponential final : public WeightDistribution {
  public:
    explicit Exponential(double alpha) : alpha_(alpha) {
        if (!(alpha > 0.0)) throw InvalidParameter("exponential requires alpha > 0");
    }
    double cdf(double w) const override { return w > 0.0 ? -std::expm1(-alpha_ * w) : 0.0; }
    double density(double w) const override {
        return w > 0.0 ? alpha_ * std::exp(-alpha_ * w) : 0.0;
    }
    double partial_moment(double eps) const override {
        if (!(eps > 0.0)) return 0.0;
        const double a = alpha_ * eps;
        return (1.0 - std::exp(-a) * (1.0 + a)) / alpha_;
    }
    double mean() const override { return 1.0 / alpha_; }
    double support_hi() const override { return kInf; }
    double quantile(double u) const override {
        if (!(u > 0.0)) return 0.0;
        return -std::log1p(-u) / alpha_;
    }
    std::optional<TypicalParams> typical_params() const override {
        // Monotonicity of w^3 f(w) holds on (0, 3/alpha). The cdf ratio at
        // lambda=1/2 increases in w, so its sup over (0, 3/alpha) is attained
        // at the endpoint: (1-e^-1.5)/(1-e^-3).
        return TypicalParams{3.0 / alpha_, 0.5, std::expm1(-1.5) / std::expm1(-3.0)};
    }
    std::string name() const override { return "exponential"; }

  private:
    double alpha_;
};

class TruncatedNormal final : public WeightDistribution {
  public:
    TruncatedNormal(double upsilon, double sigma, double b)
        : ups_(upsilon), sig_(sigma), b_(b) {
        if (!(sigma > 0.0) || !(b > 0.0))
            throw InvalidParameter("truncated_normal requires sigma > 0 and b > 0");
        z0_ = std_normal_cdf(-ups_ / sig_);
        norm_ = std_normal_cdf((b_ - ups_) / sig_) - z0_;
        if (!(norm_ > 0.0))
            throw InvalidParameter("truncated_normal: vanishing mass on (0,b)");
        mean_ = partial_moment(b_);
    }
    double cdf(double w) const override {
        if (w <= 0.0) return 0.0;
        if (w >= b_) return 1.0;
        return (std_normal_cdf((w - ups_) / sig_) - z0_) / norm_;
    }
    double density(double w) const override {
        if (w <= 0.0 || w >= b_) return 0.0;
        return std_normal_pdf((w - ups_) / sig_) / (sig_ * norm_);
    }
    double partial_moment(double eps) const override {
        const double e = std::clamp(eps, 0.0, b_);
        if (e == 0.0) return 0.0;
        const double za = -ups_ / sig_;
        const double zb = (e - ups_) / sig_;
        return (ups_ * (std_normal_cdf(zb) - std_normal_cdf(za)) +
                sig_ * (std_normal_pdf(za) - std_normal_pdf(zb))) /
               norm_;
    }
    double mean() const override { return mean_; }
    double support_hi() const override { return b_; }
    std::optional<TypicalParams> typical_params() const override {
        const double w_bar = std::min(0.5 * (ups_ + std::sqrt(ups_ * ups_ + 12.0 * sig_ * sig_)), b_);
        return TypicalParams{w_bar, std::nullopt, std::nullopt};
    }
    std::string name() const override { return "truncated_normal"; }

  private:
    double ups_, sig_, b_;
    double z0_, norm_, mean_;
};

// F(w) = log(wbar)/log(w) on (0, wbar), wbar < 1. Satisfies the monotonicity
// condition of the typical class but not the cdf-ratio condition.
class LogReciprocal final : public WeightDistribution {
  public:
    explicit LogReciprocal(double wbar) : wbar_(wbar), log_wbar_(std::log(wbar)) {
        if (!(wbar > 0.0) || !(wbar < 1.0))
            throw InvalidParameter("log_reciprocal requires 0 < wbar < 1");
        mean_ = partial_moment(wbar_);
    }
    double cdf(double w) const override {
        if (w <= 0.0) return 0.0;
        if (w >= wbar_) return 1.0;
        return log_wbar_ / std::log(w);
    }
    double density(double w) const override {
        if (w <= 0.0 || w >= wbar_) return 0.0;
        const double lw = std::log(w);
        return -log_wbar_ / (w * lw * lw);
    }
    double partial_moment(double eps) const override {
        const double e = std::clamp(eps, 0.0, wbar_);
        if (e == 0.0) return 0.0;
        const auto integrand = [this](double u) {
            if (u <= 0.0) return 0.0;
            const double lu = std::log(u);
            return -log_wbar_ / (lu * lu);
        };
        return adaptive_simpson(integrand, 0.0, e, 1e-12);
    }
    double mean() const override { return mean_; }
    double support_hi() const override { return wbar_; }
    double quantile(double u) const override {
        if (!(u > 0.0)) return 0.0;
        if (u >= 1.0) return wbar_;
        return std::exp(log_wbar_ / u);
    }
    std::optional<TypicalParams> typical_params() const override {
        return TypicalParams{wbar_, 0.5, 0.9};
    }
    std::string name() const override { return "log_reciprocal"; }

  private:
    double wbar_, log_wbar_, mean_;
};

// f(w) = A sin^2(1/w) on (0, wbar). The cdf and partial moment reduce to
// oscillatory tail integrals after substituting t = 2/u:
//   ∫_0^w sin^2(1/u) du   = w/2   - ∫_T^∞ cos t / t^2 dt,  T = 2/w
//   ∫_0^e u sin^2(1/u) du = e^2/4 - 2 ∫_T^∞ cos t / t^3 dt, T = 2/e
class SineSquared final : public WeightDistribution {
  public:
    explicit SineSquared(double wbar) : wbar_(wbar) {
        if (!(wbar > 0.0)) throw InvalidParameter("sine_squared requires wbar > 0");
        norm_ = 1.0 / raw_cdf_integral(wbar_);
        mean_ = partial_moment(wbar_);
    }
    double cdf(double w) const override {
        if (w <= 0.0) return 0.0;
        if (w >= wbar_) return 1.0;
        return norm_ * raw_cdf_integral(w);
    }
    double density(double w) const override {
        if (w <= 0.0 || w >= wbar_) return 0.0;
        const double s = std::sin(1.0 / w);
        return norm_ * s * s;
    }
    double partial_moment(double eps) const override {
        const double e = std::clamp(eps, 0.0, wbar_);
        if (e == 0.0) return 0.0;
        return norm_ * (0.25 * e * e - 2.0 * cos_over_t3_tail(2.0 / e));
    }
    double mean() const override { return mean_; }
    double support_hi() const override { return wbar_; }
    std::optional<TypicalParams> typical_params() const override {
        // The cdf-ratio condition holds (the ratio tends to lambda at zero);
        // gamma = 0.7 leaves margin over the observed sup for moderate wbar.
        return TypicalParams{wbar_, 0.5, 0.7};
    }
    std::string name() const override { return "sine_squared"; }

  private:
    static double raw_cdf_integral(double w) {
        return 0.5 * w - cos_over_t2_tail(2.0 / w);
    }
    double wbar_, norm_, mean_;
};

class Mixture final : public WeightDistribution {
  public:
    explicit Mixture(std::vector<std::pair<double, DistPtr>> comps) : comps_(std::move(comps)) {
        if (comps_.empty()) throw InvalidParameter("mixture requires at least one component");
        double total = 0.0;
        for (const auto& [beta, dist] : comps_) {
            if (!(beta > 0.0)) throw InvalidParameter("mixture weights must be positive");
            if (!dist) throw InvalidParameter("mixture component is null");
            total += beta;
        }
        if (std::fabs(total - 1.0) > 1e-12)
            throw InvalidParameter("mixture weights must sum to 1 within 1e-12");
    }
    double cdf(double w) const override {
        double s = 0.0;
        for (const auto& [beta, dist] : comps_) s += beta * dist->cdf(w);
        return s;
    }
    double density(double w) const override {
        double s = 0.0;
        for (const auto& [beta, dist] : comps_) s += beta * dist->density(w);
        return s;
    }
    double partial_moment(double eps) const override {
        double s = 0.0;
        for (const auto& [beta, dist] : comps_) s += beta * dist->partial_moment(eps);
        return s;
    }
    double mean() const override {
        double s = 0.0;
        for (const auto& [beta, dist] : comps_) s += beta * dist->mean();
        return s;
    }
    double support_hi() const override {
        double s = 0.0;
        for (const auto& [beta, dist] : comps_) s = std::max(s, dist->support_hi());
        return s;
    }
    std::optional<TypicalParams> typical_params() const override {
        // The class is closed under mixing: take the smallest neighborhood,
        // a common lambda, and the largest component gamma.
        double w_bar = kInf;
        double gamma = 0.0;
        bool have_gamma = true;
        for (const auto& [beta, dist] : comps_) {
            const auto tp = dist->typical_params();
            if (!tp) return std::nullopt;
            w_bar = std::min(w_bar, tp->w_bar);
            if (tp->gamma && tp->lambda && *tp->lambda == 0.5)
                gamma = std::max(gamma, *tp->gamma);
            else
                have_gamma = false;
        }
        if (have_gamma) return TypicalParams{w_bar, 0.5, gamma};
        return TypicalParams{w_bar, std::nullopt, std::nullopt};
    }
    std::optional<AffineDensity> affine_density() const override {
        double a = 0.0, b = 0.0;
        double hi = comps_.front().second->support_hi();
        for (const auto& [beta, dist] : comps_) {
            const auto aff = dist->affine_density();
            if (!aff || dist->support_hi() != hi) return std::nullopt;
            a += beta * aff->intercept;
            b += beta * aff->slope;
        }
        return AffineDensity{a, b};
    }
    std::string name() const override {
        std::ostringstream os;
        os << "mixture(";
        for (std::size_t i = 0; i < comps_.size(); ++i) {
            if (i) os << ", ";
            os << comps_[i].first << "*" << comps_[i].second->name();
        }
        os << ")";
        return os.str();
    }

  private:
    std::vector<std::pair<double, DistPtr>> comps_;
};

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 std::optional<double> fallback = std::nullopt) {
    const auto it = params.find(key);
    if (it != params.end()) return it->second;
    if (fallback) return *fallback;
    throw InvalidParameter("missing distribution parameter: " + key);
}

}  // namespace

DistPtr uniform01() { return std::make_shared<Uniform01>(); }
DistPtr power_dist(double A, double alpha) {
    std::ostringstream os;
    os << "power(A=" << A << ",alpha=" << alpha << ")";
    return std::make_shared<PowerDist>(A, alpha, os.str());
}
DistPtr linear_increasing() { return std::make_shared<PowerDist>(1.0, 2.0, "linear_increasing"); }
DistPtr linear_decreasing() { return std::make_shared<LinearDecreasing>(); }
DistPtr exponential_dist(double alpha) { return std::make_shared<Exponential>(alpha); }
DistPtr truncated_normal(double upsilon, double sigma, double b) {
    return std::make_shared<TruncatedNormal>(upsilon, sigma, b);
}
DistPtr log_reciprocal(double wbar) { return std::make_shared<LogReciprocal>(wbar); }
DistPtr sine_squared(double wbar) { return std::make_shared<SineSquared>(wbar); }

DistPtr make_builtin(const std::string& name, const std::map<std::string, double>& params) {
    if (name == "uniform") return uniform01();
    if (name == "power")
        return power_dist(get_param(params, "A", 1.0), get_param(params, "alpha"));
    if (name == "linear_increasing") return linear_increasing();
    if (name == "linear_decreasing") return linear_decreasing();
    if (name == "exponential") return exponential_dist(get_param(params, "alpha"));
    if (name == "truncated_normal")
        return truncated_normal(get_param(params, "upsilon"), get_param(params, "sigma"),
                                get_param(params, "b"));
    if (name == "log_reciprocal") return log_reciprocal(get_param(params, "wbar", 0.5));
    if (name == "sine_squared") return sine_squared(get_param(params, "wbar", 0.5));
    throw UnknownDistribution("unknown distribution: " + name);
}

DistPtr make_mixture(const std::vector<std::pair<double, DistPtr>>& components) {
    return std::make_shared<Mixture>(components);
}

}  // namespace knapsack
