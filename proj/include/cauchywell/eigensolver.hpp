#pragma once

#include <cstddef>
#include <vector>

#include "cauchywell/basis.hpp"
#include "cauchywell/galerkin.hpp"
#include "cauchywell/matrix.hpp"

namespace cauchywell {

// Dense symmetric eigensolver: Householder reduction to tridiagonal form,
// then implicit QL with Wilkinson shifts (all pairs) or Sturm-sequence
// bisection (a few lowest values).

struct EigenSolveOptions {
  bool compute_vectors = true;
  int max_iterations_per_eigenvalue = 60;
  /// Deflation threshold factor: |e_i| <= tol * (|d_i| + |d_{i+1}|).
  double convergence_tol = 2.220446049250313e-16;

  void validate() const;
};

/// One Ritz pair in a parity basis. The largest-magnitude coefficient of
/// `vector` is positive.
struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
  Parity parity = Parity::Even;
  /// ||A v - value v||_2, 0 when vectors were not requested.
  double residual = 0.0;
  std::size_t block_size = 0;
};

struct Decomposition {
  std::vector<double> values;  // ascending
  Matrix vectors;              // row i is the unit eigenvector of values[i]
};

/// Reduce symmetric `a` to tridiagonal (diag, sub) with sub[i] = T(i+1, i).
/// When `q` is non-null it receives the orthogonal Q with A = Q T Q^T.
void tridiagonalize(Matrix a, std::vector<double>& diag, std::vector<double>& sub, Matrix* q);

/// Full decomposition of a symmetric matrix. Throws EigenError naming the
/// index that failed to converge, ConfigError if `a` is not symmetric.
Decomposition eigh_dense(const Matrix& a, const EigenSolveOptions& opts = {});

/// The `count` lowest eigenvalues of a symmetric matrix, ascending.
std::vector<double> eigvals_lowest(const Matrix& a, std::size_t count,
                                   const EigenSolveOptions& opts = {});

/// All pairs of a Galerkin block, ascending, with residuals.
std::vector<EigenPair> eigh(const GalerkinBlock& block, const EigenSolveOptions& opts = {});

/// The `count` lowest eigenvalues of a block (1 <= count <= n).
std::vector<double> eigvals_only(const GalerkinBlock& block, std::size_t count,
                                 const EigenSolveOptions& opts = {});

/// Values-only pairs (empty vectors) carrying parity and block size.
std::vector<EigenPair> lowest_pairs(const GalerkinBlock& block, std::size_t count,
                                    const EigenSolveOptions& opts = {});

}  // namespace cauchywell
