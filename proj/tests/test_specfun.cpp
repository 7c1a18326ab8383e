#include <cmath>
#include <cstring>
#include <numbers>
#include <random>
#include <vector>

#include "cauchywell/error.hpp"
#include "cauchywell/specfun.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cauchywell;
using std::numbers::pi;

namespace {

// Reference values to 18 digits from an arbitrary-precision evaluation.
struct Golden {
  double x, si, ci;
};
const Golden goldens[] = {
    {0.001, 0.000999999944444446132, -6.33053986408059375},
    {1.0, 0.946083070367183015, 0.337403922900968135},
    {pi / 2, 1.37076216815448848, 0.472000651439568651},
    {pi, 1.85193705198246617, 0.0736679120464254860},
    {2 * pi, 1.41815157613262845, -0.0225606617463460676},
    {3 * pi, 1.67476179897996127, 0.0106202029652502881},
    {7.5, 1.51068153094338588, 0.115633203237934270},
    {5 * pi, 1.63396484610283521, 0.00396120617403044675},
    {16.0, 1.63130226827003289, -0.0142001901201900224},
    {50.0, 1.55161707248593589, -0.00562838632411630544},
    {1000.0, 1.57023312196877122, 0.000826315511090682282},
};

double five_point(double (*f)(double), double x, double h) {
  return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h);
}

double si1(double x) { return specfun::si(x); }
double ci1(double x) { return specfun::ci(x); }

}  // namespace

TEST_CASE("oracle quadrature reproduces high-precision goldens") {
  for (const auto& g : goldens) {
    CHECK(std::abs(oracle::si(g.x) - g.si) < 1e-15);
    CHECK(std::abs(oracle::ci(g.x) - g.ci) < 2e-15);
  }
}

TEST_CASE("si and ci match goldens") {
  for (const auto& g : goldens) {
    INFO("x = " << g.x);
    CHECK(std::abs(specfun::si(g.x) - g.si) <= 1e-14);
    CHECK(std::abs(specfun::ci(g.x) - g.ci) <= 1e-14);
  }
  CHECK(specfun::si(0.0) == 0.0);
}

TEST_CASE("well-known combinations") {
  CHECK(std::abs(specfun::si(pi) - 1.851937052) < 1e-9);
  CHECK(std::abs(-2 / pi + specfun::si(pi) - 1.21531728) < 5e-9);
  CHECK(std::abs(specfun::si(50.0) - oracle::si(50.0)) < 1e-12);
  const double gamma10 =
      (6 * specfun::ci(pi) - 6 * specfun::ci(3 * pi) + std::log(729.0)) / (8 * pi);
  CHECK(std::abs(gamma10 - 0.2773259) < 5e-8);
  CHECK(std::abs(gamma10 - 0.277325896250878051) < 1e-14);
  const auto [s2, c2] = specfun::si_ci(2 * pi);
  (void)c2;
  CHECK(std::abs(2 * s2 - 2.83630315) < 5e-9);
}

TEST_CASE("small-argument limit of ci") {
  const double x = 1e-8;
  CHECK(std::abs(specfun::ci(x) - (specfun::euler_gamma + std::log(x))) <= 1e-15);
}

TEST_CASE("si_ci agrees with single-function evaluation") {
  for (double x : {1e-3, 0.5, pi, 3.99, 4.0, 4.01, 10.0, 123.4, 1e3}) {
    const auto [s, c] = specfun::si_ci(x);
    CHECK(s == specfun::si(x));
    CHECK(c == specfun::ci(x));
  }
  const double x = 1e3;
  const auto [s, c] = specfun::si_ci(x);
  CHECK(std::abs(s - (pi / 2 - std::cos(x) / x)) < 1e-6);
  CHECK(std::abs(c - std::sin(x) / x) < 1e-6);
}

TEST_CASE("cin is even, finite at zero, and consistent with ci") {
  CHECK(specfun::cin(0.0) == 0.0);
  for (double x : {1e-6, 0.3, 2.0, 7.0, 40.0}) {
    CHECK(specfun::cin(-x) == specfun::cin(x));
    CHECK(std::abs(specfun::cin(x) - (specfun::euler_gamma + std::log(x) - specfun::ci(x))) <
          1e-13);
  }
  CHECK(std::abs(specfun::cin(1e-6) - 0.25e-12) < 1e-20);
}

TEST_CASE("si is odd bitwise") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    const double sum = specfun::si(-x) + specfun::si(x);
    CHECK(sum == 0.0);
  }
}

TEST_CASE("si tends to pi/2") { CHECK(std::abs(specfun::si(1e6) - pi / 2) < 1e-5); }

TEST_CASE("finite-difference derivatives") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.1, 50.0);
  const double h = 1e-3;
  for (int i = 0; i < 100; ++i) {
    double x = u(rng);
    if (x - 2 * h <= 0) x += 2 * h;
    const double ds = std::sin(x) / x;
    const double dc = std::cos(x) / x;
    INFO("x = " << x);
    // relative, with a 1e-9 absolute floor where the derivative crosses zero
    CHECK(std::abs(five_point(si1, x, h) - ds) <= 1e-6 * std::max(std::abs(ds), 1e-3));
    CHECK(std::abs(five_point(ci1, x, h) - dc) <= 1e-6 * std::max(std::abs(dc), 1e-3));
  }
}

TEST_CASE("agreement with quadrature oracle on log-spaced points") {
  specfun::Accuracy acc;
  for (int i = 0; i < 50; ++i) {
    const double x = std::pow(10.0, -3.0 + 6.0 * i / 49.0);
    INFO("x = " << x);
    CHECK(std::abs(specfun::si(x) - oracle::si(x)) <= acc.abs_tol);
    CHECK(std::abs(specfun::ci(x) - oracle::ci(x)) <= acc.abs_tol);
  }
}

TEST_CASE("crossover choice does not change the result") {
  specfun::Accuracy lo{1e-14, 2.0};
  specfun::Accuracy hi{1e-14, 8.0};
  for (double x : {2.5, 3.0, 5.0, 7.5}) {
    CHECK(std::abs(specfun::si(x, lo) - specfun::si(x, hi)) < 1e-14);
    CHECK(std::abs(specfun::ci(x, lo) - specfun::ci(x, hi)) < 1e-14);
  }
}

TEST_CASE("domain and configuration errors") {
  CHECK_THROWS_AS(specfun::ci(0.0), DomainError);
  CHECK_THROWS_AS(specfun::ci(-1.0), DomainError);
  CHECK_THROWS_AS(specfun::si_ci(0.0), DomainError);
  CHECK_THROWS_AS(specfun::si(std::nan("")), DomainError);
  CHECK_THROWS_AS(specfun::si(INFINITY), DomainError);
  CHECK_THROWS_AS(specfun::Accuracy({1e-3, 4.0}).validate(), ConfigError);
  CHECK_THROWS_AS(specfun::Accuracy({1e-14, 0.0}).validate(), ConfigError);
  CHECK_NOTHROW(specfun::Accuracy{}.validate());
}
