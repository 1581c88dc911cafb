#pragma once

namespace knapsack {

// Sine and cosine integrals Si(x) = ∫_0^x sin t / t dt and
// Ci(x) = gamma + ln x + ∫_0^x (cos t - 1)/t dt, for x > 0.
void sine_cosine_integrals(double x, double& si, double& ci);

double sine_integral(double x);
double cosine_integral(double x);

// Oscillatory tails ∫_T^∞ cos t / t^2 dt and ∫_T^∞ cos t / t^3 dt, T > 0.
// These drive the closed forms for densities that oscillate near zero.
double cos_over_t2_tail(double T);
double cos_over_t3_tail(double T);

}  // namespace knapsack
