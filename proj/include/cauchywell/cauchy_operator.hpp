#pragma once

#include <functional>
#include <vector>

#include "cauchywell/basis.hpp"

namespace cauchywell {

// Pointwise action of the Cauchy operator |Delta|^{1/2} restricted to (-1,1)
// with zero exterior condition,
//
//   A psi(x) = -(1/pi) (H) int_{-1}^{1} psi(t) / (t - x)^2 dt
//            = -(1/pi) (p.v.) int_{-1}^{1} psi'(t) / (t - x) dt .
//
// Closed forms exist for the trigonometric basis; any other profile goes
// through the slow epsilon-limit oracle.

/// f_k(x) = A cos((2k+1) pi x/2) for |x| < 1. Throws DomainError for |x| >= 1.
double apply_even_basis(int k, double x);

/// g_k(x) = A sin(k pi x) for |x| < 1, k >= 1.
double apply_odd_basis(int k, double x);

double apply_basis(const BasisIndex& b, double x);

/// <b, A b> from the analytic diagonal formulas
///   even: -2/pi + (2k+1) Si((2k+1) pi),   odd: 2k Si(2k pi).
double rayleigh_quotient(const BasisIndex& b);

/// A function on (-1,1) vanishing at +-1, with its derivative.
struct SmoothProfile {
  std::function<double(double)> value;
  std::function<double(double)> derivative;

  static SmoothProfile from_basis(const BasisIndex& b);
};

/// Cutoff sequence and accuracy for the symmetric epsilon-limit.
struct HypersingularLimitSpec {
  std::vector<double> epsilons{1e-2, 5e-3, 2.5e-3, 1.25e-3};
  int extrapolation_order = 3;
  double inner_quad_tol = 1e-12;
  /// Largest accepted disagreement between the two highest extrapolants.
  double max_residual = 1e-6;

  void validate() const;
};

struct OracleResult {
  double value;
  /// |top-order extrapolant - next-lower-order extrapolant|
  double residual;
};

/// A psi(x) by the principal-value-of-derivative route. The p.v. integral is
/// taken with a symmetric cutoff (x - eps, x + eps), with the two sides paired
/// so the pole cancels in the integrand, and extrapolated to eps -> 0 by a
/// polynomial in odd powers of eps through spec.epsilons (scaled by the
/// distance to the nearer endpoint). Throws ConvergenceError when the residual exceeds
/// spec.max_residual.
OracleResult apply_oracle_detailed(const SmoothProfile& psi, double x,
                                   const HypersingularLimitSpec& spec = {});

double apply_oracle(const SmoothProfile& psi, double x, const HypersingularLimitSpec& spec = {});

enum class TrigCandidate { CosHalf, SinPi };

struct DisproofResult {
  TrigCandidate which;
  double best_fit_energy;
  std::vector<double> grid;
  std::vector<double> residuals;
};

/// Residual |A phi(x) - E phi(x)| of a would-be eigenfunction
/// phi in {cos(pi x/2), sin(pi x)} with E its Rayleigh quotient.
DisproofResult trig_disproof_residual(TrigCandidate which, const std::vector<double>& grid);

BasisIndex candidate_basis(TrigCandidate which);

}  // namespace cauchywell
