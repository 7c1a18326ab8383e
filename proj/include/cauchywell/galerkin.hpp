#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "cauchywell/basis.hpp"
#include "cauchywell/cauchy_operator.hpp"
#include "cauchywell/matrix.hpp"
#include "cauchywell/quadrature.hpp"

namespace cauchywell {

// Galerkin matrix of the restricted Cauchy operator in one parity subspace,
//   G[k][i] = int_{-1}^{1} (A phi_k)(x) phi_i(x) dx ,
// with phi the orthonormal cosines (even) or sines (odd). Mode indices in
// the element functions follow BasisIndex (odd modes start at 1); matrix
// slots are zero-based in both parities.

enum class ElementMethod {
  /// Integrate the closed-form operator image against the basis function.
  Quadrature,
  /// Exact off-diagonal formula in the entire cosine integral Cin.
  Analytic,
};

struct AssemblyOptions {
  QuadratureSpec quad{};
  ElementMethod method = ElementMethod::Analytic;
  /// Worker threads for the lower triangle; 0 picks hardware concurrency.
  unsigned threads = 0;
};

class GalerkinBlock {
 public:
  GalerkinBlock(Parity parity, std::size_t n, QuadratureSpec quad, ElementMethod method);

  Parity parity() const noexcept { return parity_; }
  std::size_t size() const noexcept { return n_; }
  const QuadratureSpec& quad() const noexcept { return quad_; }
  ElementMethod method() const noexcept { return method_; }
  /// Diagonal entries always come from the analytic formulas.
  bool analytic_diagonal() const noexcept { return true; }

  /// Symmetric read; (i, j) and (j, i) address the same stored value.
  double operator()(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, double v);

  /// Packed lower triangle, row-major: (0,0), (1,0), (1,1), (2,0), ...
  const std::vector<double>& lower_triangle() const noexcept { return lower_; }
  Matrix to_matrix() const;

 private:
  static std::size_t packed(std::size_t i, std::size_t j);

  Parity parity_;
  std::size_t n_;
  QuadratureSpec quad_;
  ElementMethod method_;
  std::vector<double> lower_;
};

/// Reference element: analytic diagonal, numerically integrated off-diagonal.
/// Arguments are ordered canonically, so element(p,k,i) == element(p,i,k)
/// bitwise. Throws QuadratureError on non-convergence.
double element(Parity parity, int k, int i, const QuadratureSpec& quad = {});

/// int (A phi_k) phi_i by quadrature exactly as ordered, diagonal included.
QuadratureResult element_quadrature(Parity parity, int k, int i, const QuadratureSpec& quad = {});

/// Closed form for every (k, i).
double element_analytic(Parity parity, int k, int i);

/// The same element through the epsilon-limit oracle and an outer
/// quadrature. Slow; intended for k, i <= 8.
double element_by_oracle(Parity parity, int k, int i, const HypersingularLimitSpec& lim = {});

/// n x n block, lower triangle computed in parallel, mirrored on read.
/// Deterministic for a fixed QuadratureSpec and method.
GalerkinBlock assemble(Parity parity, std::size_t n, const AssemblyOptions& opts = {});

/// CSV: a `parity,n,rel_tol` header row, one value row, then the n(n+1)/2
/// packed lower-triangle values one per line, 17 significant digits.
void write_block_csv(std::ostream& os, const GalerkinBlock& block);
GalerkinBlock read_block_csv(std::istream& is);

}  // namespace cauchywell
