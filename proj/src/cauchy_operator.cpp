#include "cauchywell/cauchy_operator.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "cauchywell/error.hpp"
#include "cauchywell/quadrature.hpp"
#include "cauchywell/specfun.hpp"

namespace cauchywell {

using specfun::ci;
using specfun::si;
using std::numbers::pi;

namespace {

void require_open_interval(double x, const char* fn) {
  if (!(std::abs(x) < 1.0)) {
    throw DomainError(std::string(fn) + ": x must lie in the open interval (-1, 1)");
  }
}

}  // namespace

double apply_even_basis(int k, double x) {
  require_open_interval(x, "apply_even_basis");
  if (k < 0) throw DomainError("apply_even_basis: k must be >= 0");
  const double m = 2.0 * k + 1.0;
  return (m / 2.0) *
         (std::sin(m * pi * x / 2.0) * (ci(m * pi * (1.0 - x) / 2.0) - ci(m * pi * (1.0 + x) / 2.0)) +
          std::cos(m * pi * x / 2.0) * (si(m * pi * (1.0 - x) / 2.0) + si(m * pi * (1.0 + x) / 2.0)));
}

double apply_odd_basis(int k, double x) {
  require_open_interval(x, "apply_odd_basis");
  if (k < 1) throw DomainError("apply_odd_basis: k must be >= 1");
  const double kk = k;
  return kk * (std::sin(kk * pi * x) * (si(kk * pi * (1.0 - x)) + si(kk * pi * (1.0 + x))) -
               std::cos(kk * pi * x) * (ci(kk * pi * (1.0 - x)) - ci(kk * pi * (1.0 + x))));
}

double apply_basis(const BasisIndex& b, double x) {
  return b.parity == Parity::Even ? apply_even_basis(b.k, x) : apply_odd_basis(b.k, x);
}

double rayleigh_quotient(const BasisIndex& b) {
  const BasisIndex v = BasisIndex::make(b.parity, b.k);
  if (v.parity == Parity::Even) {
    const double m = 2.0 * v.k + 1.0;
    return -2.0 / pi + m * si(m * pi);
  }
  return 2.0 * v.k * si(2.0 * v.k * pi);
}

SmoothProfile SmoothProfile::from_basis(const BasisIndex& b) {
  return {[b](double x) { return b.value(x); }, [b](double x) { return b.derivative(x); }};
}

void HypersingularLimitSpec::validate() const {
  if (epsilons.size() < 3) throw ConfigError("limit spec: at least 3 cutoffs are required");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0 && epsilons[i] < 0.5)) {
      throw ConfigError("limit spec: cutoffs must lie in (0, 0.5)");
    }
    if (i > 0 && !(epsilons[i] < epsilons[i - 1])) {
      throw ConfigError("limit spec: cutoffs must be strictly decreasing");
    }
  }
  if (extrapolation_order < 1 || extrapolation_order >= static_cast<int>(epsilons.size())) {
    throw ConfigError("limit spec: extrapolation order must lie in [1, #cutoffs - 1]");
  }
  if (!(inner_quad_tol > 0.0 && inner_quad_tol <= 1e-6)) {
    throw ConfigError("limit spec: inner_quad_tol must lie in (0, 1e-6]");
  }
  if (!(max_residual > 0.0)) throw ConfigError("limit spec: max_residual must be positive");
}

namespace {

// Value at c = 0 of the interpolant W(0) + sum_{j<terms} a_j c^(2j+1)
// through the last terms + 1 samples.
double extrapolate_odd(const std::vector<double>& c, const std::vector<double>& w, int terms) {
  const std::size_t n = static_cast<std::size_t>(terms) + 1;
  const std::size_t first = c.size() - n;
  const long double scale = c[first];
  std::vector<std::vector<long double>> a(n, std::vector<long double>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    const long double h = c[first + i] / scale;
    a[i][0] = 1.0L;
    long double pw = h;
    for (std::size_t j = 1; j < n; ++j) {
      a[i][j] = pw;
      pw *= h * h;
    }
    a[i][n] = w[first + i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
    std::swap(a[col], a[piv]);
    for (std::size_t i = col + 1; i < n; ++i) {
      const long double f = a[i][col] / a[col][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<long double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    long double s = a[i][n];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return static_cast<double>(x[0]);
}

}  // namespace

OracleResult apply_oracle_detailed(const SmoothProfile& psi, double x,
                                   const HypersingularLimitSpec& spec) {
  require_open_interval(x, "apply_oracle");
  spec.validate();
  const auto& dpsi = psi.derivative;
  constexpr int max_sub = 2000;
  const double tol = spec.inner_quad_tol;

  // Distance to the nearer endpoint; (x - r, x + r) is the symmetric window.
  const double r = 1.0 - std::abs(x);

  double outer = 0.0;
  if (x > 0.0) {
    outer = integrate_adaptive([&](double t) { return dpsi(t) / (t - x); }, -1.0, x - r, tol, tol,
                               max_sub)
                .value;
  } else if (x < 0.0) {
    outer = integrate_adaptive([&](double t) { return dpsi(t) / (t - x); }, x + r, 1.0, tol, tol,
                               max_sub)
                .value;
  }

  const auto paired = [&](double u) { return (dpsi(x + u) - dpsi(x - u)) / u; };

  const std::size_t m = spec.epsilons.size();
  std::vector<double> cut(m);
  std::vector<double> window(m);
  for (std::size_t j = 0; j < m; ++j) cut[j] = spec.epsilons[j] * r;
  window[0] = integrate_adaptive(paired, cut[0], r, tol, tol, max_sub).value;
  for (std::size_t j = 1; j < m; ++j) {
    window[j] = window[0] + integrate_adaptive(paired, cut[j], cut[0], tol, tol, max_sub).value;
  }

  // The cut-off part int_0^c of the paired integrand is odd in c, so the
  // window is W(0) + a1 c + a3 c^3 + ...; fit that model through the last
  // (order + 1) cutoffs and compare with the fit one order lower.
  const int order = spec.extrapolation_order;
  const double top = extrapolate_odd(cut, window, order);
  const double lower = extrapolate_odd(cut, window, order - 1);
  const double p0 = top;
  const double pv = p0 + outer;
  const double residual = std::abs(top - lower) / pi;
  const double value = -pv / pi;
  if (residual > spec.max_residual) {
    throw ConvergenceError("apply_oracle: epsilon extrapolation residual " +
                               std::to_string(residual) + " at x = " + std::to_string(x),
                           value, residual);
  }
  return {value, residual};
}

double apply_oracle(const SmoothProfile& psi, double x, const HypersingularLimitSpec& spec) {
  return apply_oracle_detailed(psi, x, spec).value;
}

BasisIndex candidate_basis(TrigCandidate which) {
  return which == TrigCandidate::CosHalf ? BasisIndex{Parity::Even, 0} : BasisIndex{Parity::Odd, 1};
}

DisproofResult trig_disproof_residual(TrigCandidate which, const std::vector<double>& grid) {
  if (grid.empty()) throw DomainError("trig_disproof_residual: grid must be nonempty");
  for (double x : grid) require_open_interval(x, "trig_disproof_residual");
  const BasisIndex b = candidate_basis(which);
  DisproofResult out{which, rayleigh_quotient(b), grid, {}};
  out.residuals.reserve(grid.size());
  for (double x : grid) {
    out.residuals.push_back(std::abs(apply_basis(b, x) - out.best_fit_energy * b.value(x)));
  }
  return out;
}

}  // namespace cauchywell
