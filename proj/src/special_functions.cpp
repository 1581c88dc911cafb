#include "knapsack/special_functions.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace knapsack {

namespace {

constexpr double kEulerGamma = 0.5772156649015328606;
constexpr double kPiHalf = 1.5707963267948966;

// Power series, adequate for x <= 3:
//   Si(x) = sum (-1)^k x^(2k+1) / ((2k+1)(2k+1)!)
//   Ci(x) = gamma + ln x + sum (-1)^k x^(2k) / ((2k)(2k)!)
void cisi_series(double x, double& si, double& ci) {
    double sum_s = 0.0;
    double sum_c = 0.0;
    double p_odd = x;  // x^(2k+1) / (2k+1)!
    double sign = 1.0;
    for (int k = 0; k < 48; ++k) {
        sum_s += sign * p_odd / (2.0 * k + 1.0);
        const double p_even = p_odd * x / (2.0 * k + 2.0);  // x^(2k+2) / (2k+2)!
        sum_c += -sign * p_even / (2.0 * k + 2.0);
        p_odd = p_even * x / (2.0 * k + 3.0);
        sign = -sign;
        if (p_even < 1e-22) break;
    }
    si = sum_s;
    ci = kEulerGamma + std::log(x) + sum_c;
}

// Lentz continued fraction for the complex exponential integral at i*x;
// standard evaluation of Si/Ci for larger arguments.
void cisi_fraction(double x, double& si, double& ci) {
    constexpr double eps = 1e-17;
    constexpr double fpmin = 1e-300;
    const std::complex<double> one(1.0, 0.0);
    std::complex<double> b(1.0, x);
    std::complex<double> c(1.0 / fpmin, 0.0);
    std::complex<double> d = one / b;
    std::complex<double> h = d;
    for (int i = 2; i <= 300; ++i) {
        const double a = -static_cast<double>((i - 1) * (i - 1));
        b += 2.0;
        d = one / (a * d + b);
        c = b + a / c;
        const std::complex<double> del = c * d;
        h *= del;
        if (std::abs(del - one) < eps) break;
    }
    h *= std::complex<double>(std::cos(x), -std::sin(x));
    ci = -h.real();
    si = kPiHalf + h.imag();
}

}  // namespace

void sine_cosine_integrals(double x, double& si, double& ci) {
    if (!(x > 0.0)) {
        if (x == 0.0) {
            si = 0.0;
            ci = -std::numeric_limits<double>::infinity();
            return;
        }
        throw std::domain_error("sine_cosine_integrals: x must be >= 0");
    }
    if (x <= 3.0)
        cisi_series(x, si, ci);
    else
        cisi_fraction(x, si, ci);
}

double sine_integral(double x) {
    double si, ci;
    sine_cosine_integrals(x, si, ci);
    return si;
}

double cosine_integral(double x) {
    double si, ci;
    sine_cosine_integrals(x, si, ci);
    return ci;
}

double cos_over_t2_tail(double T) {
    double si, ci;
    sine_cosine_integrals(T, si, ci);
    return std::cos(T) / T - (kPiHalf - si);
}

double cos_over_t3_tail(double T) {
    double si, ci;
    sine_cosine_integrals(T, si, ci);
    return 0.5 * (std::cos(T) / (T * T) - std::sin(T) / T + ci);
}

}  // namespace knapsack
