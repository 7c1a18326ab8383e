#pragma once

#include <utility>

namespace cauchywell::specfun {

inline constexpr double euler_gamma = 0.5772156649015329;

/// Accuracy contract for Si/Ci. Below `crossover` the power series is
/// summed; above it the continued fraction for E1(ix) is used.
struct Accuracy {
  double abs_tol = 1e-14;
  double crossover = 4.0;

  /// Throws ConfigError unless abs_tol in [1e-15, 1e-8] and crossover > 0.
  void validate() const;
};

/// Sine integral Si(x) = int_0^x sin(t)/t dt. Odd by construction.
double si(double x, const Accuracy& acc = {});

/// Cosine integral Ci(x) = C + ln x + int_0^x (cos t - 1)/t dt, x > 0.
double ci(double x, const Accuracy& acc = {});

/// (Si(x), Ci(x)) from one shared evaluation, x > 0.
std::pair<double, double> si_ci(double x, const Accuracy& acc = {});

/// Entire cosine integral Cin(x) = int_0^x (1 - cos t)/t dt. Even in x,
/// finite at 0; equals C + ln|x| - Ci(|x|) for x != 0.
double cin(double x, const Accuracy& acc = {});

}  // namespace cauchywell::specfun
