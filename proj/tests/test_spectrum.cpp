#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "cauchywell/error.hpp"
#include "cauchywell/pipeline.hpp"
#include "cauchywell/spectrum.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cauchywell;
using std::numbers::pi;

namespace {

std::vector<EigenPair> pairs_of(std::initializer_list<double> values, Parity p) {
  std::vector<EigenPair> out;
  for (double v : values) {
    EigenPair e;
    e.value = v;
    e.parity = p;
    e.block_size = 3;
    out.push_back(e);
  }
  return out;
}

double trapezoid_norm(const SampledFunction& f) {
  double s = 0;
  for (std::size_t i = 1; i < f.grid.size(); ++i)
    s += 0.5 * (f.grid[i] - f.grid[i - 1]) * (f.values[i] * f.values[i] + f.values[i - 1] * f.values[i - 1]);
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("merge interleaves parities") {
  const auto even = pairs_of({1.1704897, 4.35648331, 7.52131594}, Parity::Even);
  const auto odd = pairs_of({2.780209, 5.9397942, 9.099426}, Parity::Odd);
  const auto r = merge(even, odd, 6);
  const double expect[] = {1.1704897, 2.780209, 4.35648331, 5.9397942, 7.52131594, 9.099426};
  REQUIRE(r.levels.size() == 6);
  for (int n = 1; n <= 6; ++n) {
    CHECK(r.level(n).energy == expect[n - 1]);
    CHECK(r.level(n).parity == (n % 2 ? Parity::Even : Parity::Odd));
    CHECK(r.asymptotic[n - 1].asymptotic == doctest::Approx(n * pi / 2 - pi / 8).epsilon(1e-15));
  }
  CHECK(std::abs(r.asymptotic[0].asymptotic - 1.178097) < 5e-7);

  const auto one = merge(pairs_of({1.2}, Parity::Even), {}, 1);
  CHECK(one.levels.size() == 1);
  CHECK(one.level(1).n == 1);

  CHECK_THROWS_AS(merge(even, odd, 7), ConfigError);
  const auto bad_odd = pairs_of({0.5, 5.9}, Parity::Odd);
  CHECK_THROWS_AS(merge(even, bad_odd, 4), StructureError);
}

TEST_CASE("six-level spectrum of the 6x6 problem") {
  const auto r = solve_spectrum(6, 6);
  const double expect[] = {1.1704897, 2.780209, 4.356483317, 5.9397942, 7.52131594, 9.099426};
  for (int n = 1; n <= 6; ++n) CHECK(std::abs(r.level(n).energy - expect[n - 1]) < 1e-5);
  const auto odd2 = solve_parity(Parity::Odd, 2, 2, false);
  CHECK(std::abs(odd2[0].value - 2.81019) < 1e-4);
  CHECK(std::abs(odd2[1].value - 5.99476) < 1e-4);
}

TEST_CASE("two-term ground state at the origin") {
  const auto pairs = eigh(assemble(Parity::Even, 2));
  const auto f = synthesize(pairs[0], {-1.0, 0.0, 1.0}, 1);
  CHECK(std::abs(f.values[1] - 0.90982) < 5e-6);
  CHECK(f.values[0] == 0.0);
  CHECK(f.values[2] == 0.0);
}

TEST_CASE("eigenfunctions: nodes, normalization, endpoints") {
  const auto grid = uniform_grid(2001);
  CHECK(grid.front() == -1.0);
  CHECK(grid.back() == 1.0);
  for (int n = 1; n <= 8; ++n) {
    const auto pair = eigenpair_for_level(30, n);
    const auto f = synthesize(pair, grid, n);
    INFO("level " << n);
    CHECK(count_nodes(f) == n - 1);
    CHECK(f.values.front() == 0.0);
    CHECK(f.values.back() == 0.0);
    CHECK(std::abs(trapezoid_norm(f) - 1.0) < 1e-6);
    CHECK(std::abs(f.normalization - 1.0) < 1e-6);
    if (n % 2 == 0) CHECK(std::abs(f.values[1000]) < 1e-15);
  }
}

TEST_CASE("node counting ignores noise") {
  SampledFunction f;
  f.grid = {-1, -0.5, 0, 0.5, 1};
  f.values = {0, 1, -1e-12, 1, 0};
  CHECK(count_nodes(f) == 0);
  f.values = {0, 1, -1e-3, 1, 0};
  CHECK(count_nodes(f) == 2);
}

TEST_CASE("ground-state approximant") {
  CHECK(std::abs(ground_state_approximant(0.0) - 0.921749) < 5e-7);
  CHECK(ground_state_approximant(1.0) == 0.0);
  CHECK(ground_state_approximant(-1.0) == 0.0);
  CHECK_THROWS_AS(ground_state_approximant(1.01), DomainError);

  const long double alpha = 1443.0L * std::numbers::pi_v<long double> / 4096.0L;
  const long double mass = oracle::composite_gauss(
      [&](long double x) { return (1 - x * x) * std::cos(alpha * x); }, -1.0L, 1.0L, 0.25L);
  const double c = static_cast<double>(1.0L / std::sqrt(mass));
  CHECK(std::abs(ground_state_approximant_norm_constant() - c) < 1e-14);
  CHECK(std::abs(c - 0.921749) < 5e-7);
}

TEST_CASE("reference comparison") {
  const auto r = solve_spectrum(100, 6);
  CHECK(compare_references(r, {}).empty());
  auto ref = kkms_reference();
  ref.resize(6);
  const auto d = compare_references(r, ref);
  REQUIRE(d.size() == 6);
  CHECK(d[0].n == 1);
  CHECK(d[0].abs_diff == doctest::Approx(std::abs(r.level(1).energy - 1.1577738)).epsilon(1e-15));
  CHECK(d[0].abs_diff < 5e-3);
  CHECK_THROWS(compare_references(r, {{40, 1.0, "x"}}));
}

TEST_CASE("fifty strictly increasing levels") {
  const auto r = solve_spectrum(200, 50);
  REQUIRE(r.levels.size() == 50);
  for (int n = 2; n <= 50; ++n) {
    CHECK(r.level(n).energy - r.level(n - 1).energy > 1e-9);
    CHECK(r.level(n).parity != r.level(n - 1).parity);
  }
  CHECK(r.level(1).converged);
  CHECK(r.level(50).converged);
  for (int n = 1; n <= 25; ++n) CHECK(r.asymptotic[n - 1].abs_error < 1.0 / n);
  CHECK(std::abs(100 * r.asymptotic[0].rel_error - 1.75) < 0.05);
  CHECK(r.asymptotic[5].rel_error < r.asymptotic[0].rel_error / 10);
}

TEST_CASE("report CSV round trip") {
  const auto r = solve_spectrum(30, 8);
  std::stringstream ss;
  write_report_csv(ss, r);
  const auto text = ss.str();
  CHECK(text.rfind("n,energy,parity,block_size,asymptotic,rel_err_percent,energy_6dp\n", 0) == 0);
  const auto back = read_report_csv(ss);
  REQUIRE(back.levels.size() == r.levels.size());
  for (std::size_t i = 0; i < r.levels.size(); ++i) {
    CHECK(back.levels[i].energy == r.levels[i].energy);
    CHECK(back.levels[i].parity == r.levels[i].parity);
    CHECK(back.levels[i].block_size == r.levels[i].block_size);
    CHECK(back.asymptotic[i].rel_error == r.asymptotic[i].rel_error);
  }
}
