#include "cauchywell/specfun.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "cauchywell/error.hpp"

namespace cauchywell::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxTerms = 500;

struct SeriesSums {
  double si;   // sum_{n>=0} (-1)^n x^(2n+1) / ((2n+1)(2n+1)!)
  double cin;  // -sum_{n>=1} (-1)^n x^(2n) / (2n (2n)!)
};

SeriesSums power_series(double x) {
  const double x2 = x * x;

  double t = x;
  double si_sum = x;
  for (int n = 0; n < kMaxTerms; ++n) {
    t *= -x2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
    const double term = t / (2.0 * n + 3.0);
    si_sum += term;
    if (std::abs(term) <= kEps * std::abs(si_sum)) break;
  }

  double u = -0.5 * x2;
  double c_sum = u / 2.0;
  for (int n = 1; n < kMaxTerms && c_sum != 0.0; ++n) {
    u *= -x2 / ((2.0 * n + 1.0) * (2.0 * n + 2.0));
    const double term = u / (2.0 * n + 2.0);
    c_sum += term;
    if (std::abs(term) <= kEps * std::abs(c_sum)) break;
  }
  return {si_sum, -c_sum};
}

// E1(ix) = -Ci(x) + i (Si(x) - pi/2), summed as a continued fraction with
// the modified Lentz method. Converges quickly for x > 2.
std::pair<double, double> continued_fraction(double x, const Accuracy& acc) {
  using cplx = std::complex<double>;
  constexpr double tiny = 1e-300;
  const double tol = std::max(kEps, 0.01 * acc.abs_tol);

  cplx b(1.0, x);
  cplx c(1.0 / tiny, 0.0);
  cplx d = 1.0 / b;
  cplx h = d;
  bool converged = false;
  for (int i = 2; i < 10 * kMaxTerms; ++i) {
    const double a = -static_cast<double>(i - 1) * (i - 1);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del.real() - 1.0) + std::abs(del.imag()) < tol) {
      converged = true;
      break;
    }
  }
  h *= cplx(std::cos(x), -std::sin(x));
  if (!converged) {
    throw ConvergenceError("si/ci continued fraction did not converge at x = " + std::to_string(x),
                           h.imag(), std::abs(h));
  }
  return {std::numbers::pi / 2.0 + h.imag(), -h.real()};
}

void require_finite(double x, const char* fn) {
  if (!std::isfinite(x)) throw DomainError(std::string(fn) + ": argument must be finite");
}

}  // namespace

void Accuracy::validate() const {
  if (!(abs_tol >= 1e-15 && abs_tol <= 1e-8)) {
    throw ConfigError("specfun accuracy: abs_tol must lie in [1e-15, 1e-8]");
  }
  if (!(crossover > 0.0) || !std::isfinite(crossover)) {
    throw ConfigError("specfun accuracy: crossover must be positive");
  }
}

std::pair<double, double> si_ci(double x, const Accuracy& acc) {
  require_finite(x, "si_ci");
  if (!(x > 0.0)) throw DomainError("si_ci: argument must be positive");
  if (x <= acc.crossover) {
    const SeriesSums s = power_series(x);
    return {s.si, (euler_gamma + std::log(x)) - s.cin};
  }
  return continued_fraction(x, acc);
}

double si(double x, const Accuracy& acc) {
  require_finite(x, "si");
  if (x == 0.0) return 0.0;
  const double v = si_ci(std::abs(x), acc).first;
  return std::signbit(x) ? -v : v;
}

double ci(double x, const Accuracy& acc) {
  require_finite(x, "ci");
  if (!(x > 0.0)) throw DomainError("ci: argument must be positive");
  return si_ci(x, acc).second;
}

double cin(double x, const Accuracy& acc) {
  require_finite(x, "cin");
  const double ax = std::abs(x);
  if (ax == 0.0) return 0.0;
  if (ax <= acc.crossover) return power_series(ax).cin;
  return euler_gamma + std::log(ax) - continued_fraction(ax, acc).second;
}

}  // namespace cauchywell::specfun
