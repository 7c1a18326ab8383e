#pragma once

#include <functional>

namespace cauchywell {

/// Tolerances and mesh parameters for every singular integration on (-1,1).
struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-13;
  int max_subdivisions = 500;
  /// Width of the layers next to x = +-1 integrated on a graded mesh.
  double endpoint_margin = 1.0 / 16.0;
  /// Number of geometric halvings toward the endpoint inside each layer.
  int graded_levels = 40;

  /// Throws ConfigError when a field is outside its admissible range.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) integration over [a, b].
/// Throws QuadratureError if max_subdivisions is exhausted before the
/// error estimate drops below max(abs_tol, rel_tol * |value|).
QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, double rel_tol,
                                    double abs_tol, int max_subdivisions);

/// Integral over [-1, 1] of a function with integrable (logarithmic)
/// singularities at both endpoints. The interior [-1+m, 1-m] is adaptive;
/// each boundary layer is split geometrically toward the endpoint and
/// every panel gets one 15-point Kronrod rule.
QuadratureResult integrate_interval(const Integrand& f, const QuadratureSpec& spec);

/// Graded-mesh integral over [edge, edge + width] (width may be negative),
/// refined geometrically toward `edge` where the integrand may be singular.
QuadratureResult integrate_graded(const Integrand& f, double edge, double width, int levels);

}  // namespace cauchywell
