#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "cauchywell/eigensolver.hpp"
#include "cauchywell/error.hpp"
#include "cauchywell/galerkin.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cauchywell;

namespace {

Matrix random_symmetric(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = u(rng);
  return a;
}

double orthonormality_defect(const Matrix& v) {
  const std::size_t n = v.size();
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double dot = 0;
      for (std::size_t k = 0; k < n; ++k) dot += v(i, k) * v(j, k);
      worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

double reconstruction_error(const Matrix& a, const Decomposition& d) {
  const std::size_t n = a.size();
  Matrix r = a;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r(i, j) -= d.values[m] * d.vectors(m, i) * d.vectors(m, j);
  return r.frobenius_norm();
}

}  // namespace

TEST_CASE("2x2 even block") {
  const auto pairs = eigh(assemble(Parity::Even, 2));
  REQUIRE(pairs.size() == 2);
  CHECK(std::abs(pairs[0].value - 1.191256) < 1e-5);
  CHECK(std::abs(pairs[1].value - 4.411727) < 1e-5);
  CHECK(std::abs(pairs[0].vector[0] - 0.996257) < 1e-5);
  CHECK(std::abs(pairs[0].vector[1] - (-0.086437)) < 1e-5);
  CHECK(std::abs(pairs[1].vector[0] - 0.086437) < 1e-5);
  CHECK(std::abs(pairs[1].vector[1] - 0.996257) < 1e-5);
  for (const auto& p : pairs) {
    CHECK(p.parity == Parity::Even);
    CHECK(p.block_size == 2);
  }
}

TEST_CASE("3x3 even block") {
  const auto block = assemble(Parity::Even, 3);
  const auto v = eigvals_only(block, 3);
  CHECK(std::abs(v[0] - 1.1814891) < 1e-5);
  CHECK(std::abs(v[1] - 4.3854565) < 1e-5);
  CHECK(std::abs(v[2] - 7.569241) < 1e-5);
  const auto one = eigvals_only(block, 1);
  CHECK(one[0] == doctest::Approx(eigh(block)[0].value).epsilon(1e-14));
}

TEST_CASE("1x1 and identity") {
  CHECK(std::abs(eigh(assemble(Parity::Even, 1))[0].value - 1.21531728) < 5e-9);
  const auto d = eigh_dense(Matrix::identity(3));
  for (double v : d.values) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(orthonormality_defect(d.vectors) < 1e-15);
}

TEST_CASE("random 5x5 against characteristic-polynomial bisection") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 200; ++t) {
    const Matrix a = random_symmetric(5, rng);
    std::vector<std::vector<double>> rows(5, std::vector<double>(5));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) rows[i][j] = a(i, j);
    const auto expect = oracle::secular_roots(rows);
    const auto got = eigh_dense(a).values;
    const auto low = eigvals_lowest(a, 2);
    for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(got[i] - expect[i]) <= 1e-9);
    for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(low[i] - expect[i]) <= 1e-9);
  }
}

TEST_CASE("repeated eigenvalues") {
  Matrix a(4);
  a(0, 0) = a(1, 1) = 2.0;
  a(2, 2) = a(3, 3) = -1.0;
  const auto d = eigh_dense(a);
  CHECK(d.values == std::vector<double>{-1.0, -1.0, 2.0, 2.0});
  CHECK(orthonormality_defect(d.vectors) < 1e-15);
  const auto low = eigvals_lowest(a, 2);
  CHECK(std::abs(low[0] + 1.0) < 1e-14);
  CHECK(std::abs(low[1] + 1.0) < 1e-14);
}

TEST_CASE("trace, orthonormality and reconstruction") {
  std::mt19937_64 rng(42);
  for (std::size_t n : {7u, 40u, 100u, 200u}) {
    const Matrix a = random_symmetric(n, rng);
    const auto d = eigh_dense(a);
    double trace = 0, sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      trace += a(i, i);
      sum += d.values[i];
    }
    CHECK(std::abs(trace - sum) <= 1e-9 * static_cast<double>(n));
    CHECK(std::is_sorted(d.values.begin(), d.values.end()));
    CHECK(orthonormality_defect(d.vectors) <= 1e-10);
    if (n <= 100) CHECK(reconstruction_error(a, d) <= 1e-8 * a.frobenius_norm());
  }
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const auto block = assemble(p, 100);
    const Matrix a = block.to_matrix();
    const auto d = eigh_dense(a);
    CHECK(orthonormality_defect(d.vectors) <= 1e-10);
    CHECK(reconstruction_error(a, d) <= 1e-8 * a.frobenius_norm());
  }
}

TEST_CASE("pair invariants") {
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const auto pairs = eigh(assemble(p, 60));
    for (const auto& e : pairs) {
      double norm = 0;
      std::size_t big = 0;
      for (std::size_t i = 0; i < e.vector.size(); ++i) {
        norm += e.vector[i] * e.vector[i];
        if (std::abs(e.vector[i]) > std::abs(e.vector[big])) big = i;
      }
      CHECK(std::abs(std::sqrt(norm) - 1.0) <= 1e-12);
      CHECK(e.vector[big] > 0);
      CHECK(e.residual <= 1e-9 * (1 + std::abs(e.value)));
    }
  }
}

TEST_CASE("values-only path matches the full decomposition") {
  for (Parity p : {Parity::Even, Parity::Odd}) {
    const auto block = assemble(p, 120);
    const auto full = eigh(block);
    for (std::size_t count : {1u, 6u, 60u, 61u, 120u}) {
      const auto v = eigvals_only(block, count);
      REQUIRE(v.size() == count);
      for (std::size_t i = 0; i < count; ++i) CHECK(std::abs(v[i] - full[i].value) <= 1e-10);
    }
    const auto lp = lowest_pairs(block, 4);
    CHECK(lp.size() == 4);
    CHECK(lp[0].vector.empty());
    CHECK(lp[0].parity == p);
  }
}

TEST_CASE("Rayleigh-Ritz monotonicity") {
  std::vector<double> prev = eigvals_only(assemble(Parity::Even, 2), 2);
  for (std::size_t n = 3; n <= 31; ++n) {
    const auto cur = eigvals_only(assemble(Parity::Even, n), n);
    for (std::size_t i = 0; i + 1 < n; ++i) CHECK(cur[i] <= prev[i] + 1e-12);
    prev = cur;
  }
}

TEST_CASE("errors") {
  Matrix a(2);
  a(0, 1) = 1.0;
  CHECK_THROWS_AS(eigh_dense(a), ConfigError);
  CHECK_THROWS_AS(eigvals_only(assemble(Parity::Even, 3), 0), ConfigError);
  CHECK_THROWS_AS(eigvals_only(assemble(Parity::Even, 3), 4), ConfigError);
  EigenSolveOptions o;
  o.max_iterations_per_eigenvalue = 10;
  CHECK_THROWS_AS(o.validate(), ConfigError);
  o = {};
  o.convergence_tol = 1e-17;
  CHECK_THROWS_AS(o.validate(), ConfigError);
}
