#include "cauchywell/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "cauchywell/error.hpp"

namespace cauchywell {

namespace {

struct Panel {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

// One G7/K15 pair on [a, b]. Boost stores the non-negative half of the
// symmetric node set, centre first.
Panel kronrod_panel(const Integrand& f, double a, double b) {
  using kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  using gauss = boost::math::quadrature::gauss<double, 7>;
  const auto& nodes = kronrod::abscissa();
  const auto& kw = kronrod::weights();
  const auto& gw = gauss::weights();

  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(centre);
  double k_sum = fc * kw[0];
  double g_sum = fc * gw[0];
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double dx = half * nodes[i];
    const double pair = f(centre - dx) + f(centre + dx);
    k_sum += kw[i] * pair;
    // Gauss nodes sit at the even Kronrod positions.
    if (i % 2 == 0) g_sum += gw[i / 2] * pair;
  }
  const double value = k_sum * half;
  const double err = std::abs((k_sum - g_sum) * half);
  return {a, b, value, err};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol >= 1e-13 && rel_tol <= 1e-6)) {
    throw ConfigError("quadrature: rel_tol must lie in [1e-13, 1e-6]");
  }
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
    throw ConfigError("quadrature: abs_tol must be positive");
  }
  if (!(endpoint_margin > 0.0 && endpoint_margin < 0.5)) {
    throw ConfigError("quadrature: endpoint_margin must lie in (0, 0.5)");
  }
  if (max_subdivisions < 10) throw ConfigError("quadrature: max_subdivisions must be >= 10");
  if (graded_levels < 1 || graded_levels > 60) {
    throw ConfigError("quadrature: graded_levels must lie in [1, 60]");
  }
}

namespace {

// Global adaptive refinement seeded with an arbitrary panel set: the panel
// with the largest error estimate is bisected until the summed estimate
// meets max(abs_tol, rel_tol * |total|).
QuadratureResult refine(const Integrand& f, std::vector<Panel> seed, double rel_tol,
                        double abs_tol, int max_subdivisions, const std::string& where) {
  double total = 0.0;
  double total_err = 0.0;
  for (const Panel& p : seed) {
    total += p.value;
    total_err += p.error;
  }
  std::priority_queue<Panel> heap(std::less<Panel>{}, std::move(seed));
  int intervals = static_cast<int>(heap.size());

  auto tolerance = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };

  while (total_err > tolerance()) {
    if (intervals >= max_subdivisions) {
      throw QuadratureError("adaptive quadrature on " + where + " exceeded " +
                                std::to_string(max_subdivisions) + " subdivisions",
                            total, total_err);
    }
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = kronrod_panel(f, worst.a, mid);
    const Panel right = kronrod_panel(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }

  // Re-sum in position order so the result does not carry the running
  // update's rounding drift and is independent of heap layout.
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
  QuadratureResult out;
  for (const Panel& p : panels) {
    out.value += p.value;
    out.error += p.error;
  }
  out.intervals = intervals;
  return out;
}

std::vector<Panel> graded_panels(const Integrand& f, double edge, double width, int levels) {
  std::vector<Panel> out;
  double outer = 1.0;
  for (int level = 0; level < levels; ++level) {
    const double inner = 0.5 * outer;
    double lo = edge + inner * width;
    double hi = edge + outer * width;
    if (lo > hi) std::swap(lo, hi);
    out.push_back(kronrod_panel(f, lo, hi));
    outer = inner;
  }
  return out;
}

}  // namespace

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, double rel_tol,
                                    double abs_tol, int max_subdivisions) {
  return refine(f, {kronrod_panel(f, a, b)}, rel_tol, abs_tol, max_subdivisions,
                "[" + std::to_string(a) + ", " + std::to_string(b) + "]");
}

QuadratureResult integrate_graded(const Integrand& f, double edge, double width, int levels) {
  QuadratureResult out;
  for (const Panel& p : graded_panels(f, edge, width, levels)) {
    out.value += p.value;
    out.error += p.error;
    ++out.intervals;
  }
  return out;
}

QuadratureResult integrate_interval(const Integrand& f, const QuadratureSpec& spec) {
  const double m = spec.endpoint_margin;
  std::vector<Panel> seed = graded_panels(f, -1.0, m, spec.graded_levels);
  const std::vector<Panel> right = graded_panels(f, 1.0, -m, spec.graded_levels);
  seed.insert(seed.end(), right.begin(), right.end());
  seed.push_back(kronrod_panel(f, -1.0 + m, 1.0 - m));
  return refine(f, std::move(seed), spec.rel_tol, spec.abs_tol,
                spec.max_subdivisions + 2 * spec.graded_levels, "[-1, 1]");
}

}  // namespace cauchywell
