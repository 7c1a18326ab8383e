#include "cauchywell/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "cauchywell/error.hpp"

namespace cauchywell {

void EigenSolveOptions::validate() const {
  if (!(convergence_tol >= std::numeric_limits<double>::epsilon())) {
    throw ConfigError("eigensolver: convergence_tol must be >= machine epsilon");
  }
  if (max_iterations_per_eigenvalue < 30) {
    throw ConfigError("eigensolver: max_iterations_per_eigenvalue must be >= 30");
  }
}

void tridiagonalize(Matrix a, std::vector<double>& diag, std::vector<double>& sub, Matrix* q) {
  const std::size_t n = a.size();
  diag.assign(n, 0.0);
  sub.assign(n > 0 ? n - 1 : 0, 0.0);
  if (n == 0) return;

  std::vector<std::vector<double>> reflectors;
  std::vector<double> betas;
  std::vector<double> v;
  std::vector<double> p;

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    const std::size_t off = k + 1;
    v.resize(m);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = a(off + i, k);
      norm2 += v[i] * v[i];
    }
    const double norm = std::sqrt(norm2);
    const double tail2 = norm2 - v[0] * v[0];
    if (norm == 0.0 || tail2 == 0.0) {
      // Column already reduced.
      sub[k] = v[0];
      reflectors.emplace_back();
      betas.push_back(0.0);
      continue;
    }
    const double alpha = v[0] > 0.0 ? -norm : norm;
    v[0] -= alpha;
    const double vtv = v[0] * v[0] + tail2;
    const double beta = 2.0 / vtv;
    sub[k] = alpha;

    // p = beta * B v on the trailing block B = a[off.., off..].
    p.assign(m, 0.0);
    double ptv = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double* row = a.row(off + i) + off;
      double s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += row[j] * v[j];
      p[i] = beta * s;
      ptv += p[i] * v[i];
    }
    const double kappa = 0.5 * beta * ptv;
    for (std::size_t i = 0; i < m; ++i) p[i] -= kappa * v[i];  // p is now w

    for (std::size_t i = 0; i < m; ++i) {
      double* row = a.row(off + i) + off;
      const double vi = v[i];
      const double wi = p[i];
      for (std::size_t j = 0; j < m; ++j) row[j] -= vi * p[j] + wi * v[j];
    }
    reflectors.push_back(v);
    betas.push_back(beta);
  }
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i);
  if (n >= 2) sub[n - 2] = a(n - 1, n - 2);

  if (q == nullptr) return;
  *q = Matrix::identity(n);
  std::vector<double> s;
  for (std::size_t kk = reflectors.size(); kk-- > 0;) {
    const double beta = betas[kk];
    if (beta == 0.0) continue;
    const auto& u = reflectors[kk];
    const std::size_t off = kk + 1;
    const std::size_t m = n - off;
    s.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      const double* row = q->row(off + i) + off;
      const double ui = u[i];
      for (std::size_t j = 0; j < m; ++j) s[j] += ui * row[j];
    }
    for (std::size_t i = 0; i < m; ++i) {
      double* row = q->row(off + i) + off;
      const double f = beta * u[i];
      for (std::size_t j = 0; j < m; ++j) row[j] -= f * s[j];
    }
  }
}

namespace {

// Implicit QL with Wilkinson shifts on (d, e), e[i] = T(i+1, i).
// When `vt` is given, its rows are rotated alongside: rows start as Q^T and
// end as the eigenvectors.
void tridiagonal_ql(std::vector<double>& d, std::vector<double> e, Matrix* vt,
                    const EigenSolveOptions& opts) {
  const std::size_t n = d.size();
  if (n <= 1) return;
  e.push_back(0.0);
  const double tol = opts.convergence_tol;

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= tol * dd) break;
      }
      if (m == l) break;
      if (iter++ >= opts.max_iterations_per_eigenvalue) {
        throw EigenError("QL iteration did not converge for eigenvalue " + std::to_string(l), l);
      }
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (vt != nullptr) {
          double* zi = vt->row(i);
          double* zi1 = vt->row(i + 1);
          for (std::size_t k = 0; k < n; ++k) {
            f = zi1[k];
            zi1[k] = s * zi[k] + c * f;
            zi[k] = c * zi[k] - s * f;
          }
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
}

// Number of eigenvalues of the tridiagonal (d, e) strictly below x.
std::size_t sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x) {
  constexpr double tiny = 1e-300;
  std::size_t count = 0;
  double q = d[0] - x;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (q == 0.0) q = tiny;
    q = d[i] - x - e[i - 1] * e[i - 1] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> bisect_lowest(const std::vector<double>& d, const std::vector<double>& e,
                                  std::size_t count, const EigenSolveOptions& opts) {
  const std::size_t n = d.size();
  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
    lo = std::min(lo, d[i] - radius);
    hi = std::max(hi, d[i] + radius);
  }
  const double scale = std::max(std::abs(lo), std::abs(hi));
  lo -= 4.0 * std::numeric_limits<double>::epsilon() * scale + 1e-300;
  hi += 4.0 * std::numeric_limits<double>::epsilon() * scale + 1e-300;

  std::vector<double> out(count);
  double floor = lo;
  for (std::size_t j = 0; j < count; ++j) {
    double a = floor;
    double b = hi;
    // Each halving gains a bit; 2 * 64 passes is far past double resolution.
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (b - a <= 2.0 * opts.convergence_tol * std::max(std::abs(a), std::abs(b))) break;
      if (sturm_count(d, e, mid) > j) {
        b = mid;
      } else {
        a = mid;
      }
    }
    out[j] = 0.5 * (a + b);
    floor = a;
  }
  return out;
}

void require_symmetric(const Matrix& a) {
  const std::size_t n = a.size();
  const double scale = a.frobenius_norm();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(a(i, j) - a(j, i)) > 1e-12 * scale) {
        throw ConfigError("eigensolver: matrix is not symmetric");
      }
    }
  }
}

void orient(std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  }
  if (!v.empty() && v[best] < 0.0) {
    for (double& x : v) x = -x;
  }
}

}  // namespace

Decomposition eigh_dense(const Matrix& a, const EigenSolveOptions& opts) {
  opts.validate();
  require_symmetric(a);
  const std::size_t n = a.size();
  std::vector<double> d;
  std::vector<double> e;
  Decomposition out;
  if (!opts.compute_vectors) {
    tridiagonalize(a, d, e, nullptr);
    tridiagonal_ql(d, e, nullptr, opts);
    std::sort(d.begin(), d.end());
    out.values = std::move(d);
    return out;
  }

  Matrix q;
  tridiagonalize(a, d, e, &q);
  Matrix vt(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) vt(i, j) = q(j, i);
  }
  tridiagonal_ql(d, e, &vt, opts);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return d[l] < d[r]; });
  out.values.resize(n);
  out.vectors = Matrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = d[order[i]];
    std::copy(vt.row(order[i]), vt.row(order[i]) + n, out.vectors.row(i));
  }
  return out;
}

std::vector<double> eigvals_lowest(const Matrix& a, std::size_t count,
                                   const EigenSolveOptions& opts) {
  opts.validate();
  require_symmetric(a);
  const std::size_t n = a.size();
  if (count < 1 || count > n) throw ConfigError("eigvals_lowest: count must lie in [1, n]");
  std::vector<double> d;
  std::vector<double> e;
  tridiagonalize(a, d, e, nullptr);
  if (2 * count > n) {
    tridiagonal_ql(d, e, nullptr, opts);
    std::sort(d.begin(), d.end());
    d.resize(count);
    return d;
  }
  return bisect_lowest(d, e, count, opts);
}

std::vector<EigenPair> eigh(const GalerkinBlock& block, const EigenSolveOptions& opts) {
  const Matrix a = block.to_matrix();
  const Decomposition dec = eigh_dense(a, opts);
  const std::size_t n = a.size();
  std::vector<EigenPair> out(n);
  std::vector<double> av(n);
  for (std::size_t j = 0; j < n; ++j) {
    EigenPair& pair = out[j];
    pair.value = dec.values[j];
    pair.parity = block.parity();
    pair.block_size = n;
    if (!opts.compute_vectors) continue;
    pair.vector.assign(dec.vectors.row(j), dec.vectors.row(j) + n);
    orient(pair.vector);
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double* row = a.row(i);
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += row[k] * pair.vector[k];
      const double diff = s - pair.value * pair.vector[i];
      r2 += diff * diff;
    }
    pair.residual = std::sqrt(r2);
  }
  return out;
}

std::vector<double> eigvals_only(const GalerkinBlock& block, std::size_t count,
                                 const EigenSolveOptions& opts) {
  return eigvals_lowest(block.to_matrix(), count, opts);
}

std::vector<EigenPair> lowest_pairs(const GalerkinBlock& block, std::size_t count,
                                    const EigenSolveOptions& opts) {
  const std::vector<double> values = eigvals_only(block, count, opts);
  std::vector<EigenPair> out;
  out.reserve(values.size());
  for (double v : values) {
    EigenPair p;
    p.value = v;
    p.parity = block.parity();
    p.block_size = block.size();
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace cauchywell
