#include "cauchywell/spectrum.hpp"

#include <cmath>
#include <istream>
#include <json.hpp>
#include <numbers>
#include <ostream>
#include <string>

#include "cauchywell/error.hpp"
#include "cauchywell/io.hpp"

namespace cauchywell {

using std::numbers::pi;

namespace {

constexpr double kApproxAmplitude = 0.921749;
constexpr double kApproxAlpha = 1443.0 * pi / 4096.0;

AsymptoticRow asymptotic_row(const Level& level) {
  AsymptoticRow row;
  row.n = level.n;
  row.asymptotic = asymptotic_energy(level.n);
  row.abs_error = std::abs(level.energy - row.asymptotic);
  row.rel_error = row.abs_error / level.energy;
  return row;
}

bool is_converged(int n, std::size_t block_size) {
  return static_cast<std::size_t>(n) * 4 <= block_size;
}

}  // namespace

double asymptotic_energy(int n) { return n * pi / 2.0 - pi / 8.0; }

const Level& SpectrumReport::level(int n) const {
  for (const Level& l : levels) {
    if (l.n == n) return l;
  }
  throw ConfigError("spectrum report has no level n = " + std::to_string(n));
}

SpectrumReport single_parity_report(const std::vector<EigenPair>& pairs, std::size_t count) {
  if (count > pairs.size()) throw ConfigError("single_parity_report: not enough pairs");
  SpectrumReport report;
  for (std::size_t j = 0; j < count; ++j) {
    const EigenPair& src = pairs[j];
    Level level;
    level.n = static_cast<int>(src.parity == Parity::Even ? 2 * j + 1 : 2 * j + 2);
    level.energy = src.value;
    level.parity = src.parity;
    level.block_size = src.block_size;
    level.converged = is_converged(level.n, level.block_size);
    report.levels.push_back(level);
    report.asymptotic.push_back(asymptotic_row(level));
  }
  return report;
}

SpectrumReport merge(const std::vector<EigenPair>& even, const std::vector<EigenPair>& odd,
                     std::size_t count) {
  if (count > even.size() + odd.size()) {
    throw ConfigError("merge: requested " + std::to_string(count) + " levels but only " +
                      std::to_string(even.size() + odd.size()) + " are available");
  }
  SpectrumReport report;
  report.levels.reserve(count);
  std::size_t next_even = 0;
  std::size_t next_odd = 0;
  for (std::size_t n = 1; n <= count; ++n) {
    const bool take_even =
        next_odd >= odd.size() ||
        (next_even < even.size() && even[next_even].value <= odd[next_odd].value);
    const EigenPair& src = take_even ? even[next_even++] : odd[next_odd++];
    Level level;
    level.n = static_cast<int>(n);
    level.energy = src.value;
    level.parity = take_even ? Parity::Even : Parity::Odd;
    level.block_size = src.block_size;
    level.converged = is_converged(level.n, level.block_size);

    const Parity expected = (n % 2 == 1) ? Parity::Even : Parity::Odd;
    if (level.parity != expected) {
      throw StructureError("merge: level " + std::to_string(n) + " has parity " +
                           std::string(to_string(level.parity)) + ", expected " +
                           std::string(to_string(expected)));
    }
    if (!report.levels.empty() && !(level.energy > report.levels.back().energy)) {
      throw StructureError("merge: energies are not strictly increasing at level " +
                           std::to_string(n));
    }
    report.levels.push_back(level);
    report.asymptotic.push_back(asymptotic_row(level));
  }
  return report;
}

std::vector<ReferenceDiff> compare_references(const SpectrumReport& report,
                                              const std::vector<ReferenceValue>& reference) {
  std::vector<ReferenceDiff> out;
  out.reserve(reference.size());
  for (const ReferenceValue& ref : reference) {
    const Level& level = report.level(ref.n);
    const double diff = std::abs(level.energy - ref.value);
    out.push_back({ref.n, diff, diff / std::abs(ref.value), ref.source});
  }
  return out;
}

std::vector<ReferenceValue> kkms_reference() {
  // Asymptotic-expansion values of Kulczycki, Kwasnicki, Malecki and Stos;
  // eight digits for n <= 6, six beyond.
  return {{1, 1.1577738, "KKMS"},  {2, 2.7547547, "KKMS"},  {3, 4.3168010, "KKMS"},
          {4, 5.8921474, "KKMS"},  {5, 7.4601757, "KKMS"},  {6, 9.0328526, "KKMS"},
          {7, 10.602293, "KKMS"},  {8, 12.174118, "KKMS"},  {9, 13.744109, "KKMS"},
          {10, 15.315554, "KKMS"}};
}

std::vector<ReferenceValue> kwasnicki_reference() {
  return {{1, 1.1577, "K"}, {2, 2.7547, "K"}, {3, 4.3168, "K"},
          {4, 5.8921, "K"}, {5, 7.4601, "K"}, {6, 9.0328, "K"}};
}

std::vector<double> uniform_grid(std::size_t points) {
  if (points < 2) throw ConfigError("uniform_grid: need at least 2 points");
  std::vector<double> grid(points);
  const double m = static_cast<double>(points - 1);
  // symmetric about 0 bit for bit
  for (std::size_t i = 0; i < points; ++i) grid[i] = (2.0 * static_cast<double>(i) - m) / m;
  return grid;
}

SampledFunction synthesize(const EigenPair& pair, const std::vector<double>& grid, int label) {
  if (pair.vector.empty()) throw ConfigError("synthesize: eigenpair carries no vector");
  SampledFunction f;
  f.grid = grid;
  f.label = label;
  f.values.resize(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    const double x = grid[g];
    if (!(std::abs(x) <= 1.0)) throw DomainError("synthesize: grid point outside [-1, 1]");
    if (std::abs(x) == 1.0) {
      f.values[g] = 0.0;
      continue;
    }
    double s = 0.0;
    for (std::size_t j = 0; j < pair.vector.size(); ++j) {
      s += pair.vector[j] * BasisIndex::from_slot(pair.parity, j).value(x);
    }
    f.values[g] = s;
  }
  double integral = 0.0;
  for (std::size_t g = 1; g < grid.size(); ++g) {
    const double h = grid[g] - grid[g - 1];
    integral += 0.5 * h * (f.values[g] * f.values[g] + f.values[g - 1] * f.values[g - 1]);
  }
  f.normalization = std::sqrt(integral);
  return f;
}

int count_nodes(const SampledFunction& f, double floor) {
  int nodes = 0;
  int last_sign = 0;
  const std::size_t n = f.values.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(f.grid[i]) >= 1.0) continue;
    const double v = f.values[i];
    if (std::abs(v) < floor) continue;
    const int sign = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++nodes;
    last_sign = sign;
  }
  return nodes;
}

double ground_state_approximant(double x) {
  if (!(std::abs(x) <= 1.0)) throw DomainError("ground_state_approximant: |x| must be <= 1");
  const double radicand = (1.0 - x * x) * std::cos(kApproxAlpha * x);
  if (radicand < 0.0) throw DomainError("ground_state_approximant: negative radicand");
  return kApproxAmplitude * std::sqrt(radicand);
}

double ground_state_approximant_norm_constant() {
  // int_{-1}^{1} (1 - x^2) cos(a x) dx = 4 (sin a - a cos a) / a^3
  const double a = kApproxAlpha;
  const double integral = 4.0 * (std::sin(a) - a * std::cos(a)) / (a * a * a);
  return 1.0 / std::sqrt(integral);
}

void write_report_csv(std::ostream& os, const SpectrumReport& report) {
  os << "n,energy,parity,block_size,asymptotic,rel_err_percent,energy_6dp\n";
  for (std::size_t i = 0; i < report.levels.size(); ++i) {
    const Level& l = report.levels[i];
    const AsymptoticRow& a = report.asymptotic[i];
    os << l.n << ',' << io::format_double(l.energy) << ',' << to_string(l.parity) << ','
       << l.block_size << ',' << io::format_double(a.asymptotic) << ','
       << io::format_double(100.0 * a.rel_error) << ',' << io::format_fixed(l.energy, 6) << '\n';
  }
}

SpectrumReport read_report_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("n,energy,parity,block_size,asymptotic,rel_err_percent", 0) != 0) {
    throw ConfigError("spectrum csv: unexpected header");
  }
  SpectrumReport report;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto fields = io::split(line);
    if (fields.size() < 6) throw ConfigError("spectrum csv: short row '" + line + "'");
    Level level;
    level.n = static_cast<int>(io::parse_integer(fields[0]));
    level.energy = io::parse_double(fields[1]);
    level.parity = parse_parity(fields[2]);
    level.block_size = static_cast<std::size_t>(io::parse_integer(fields[3]));
    level.converged = is_converged(level.n, level.block_size);
    report.levels.push_back(level);
    report.asymptotic.push_back(asymptotic_row(level));
  }
  return report;
}

void write_report_json(std::ostream& os, const SpectrumReport& report, const ReportMetadata& meta) {
  nlohmann::ordered_json doc;
  doc["tool_version"] = meta.tool_version;
  doc["element_method"] = meta.element_method;
  doc["quadrature"] = {{"rel_tol", meta.quad.rel_tol},
                       {"abs_tol", meta.quad.abs_tol},
                       {"max_subdivisions", meta.quad.max_subdivisions},
                       {"endpoint_margin", meta.quad.endpoint_margin},
                       {"graded_levels", meta.quad.graded_levels}};
  nlohmann::ordered_json levels = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.levels.size(); ++i) {
    const Level& l = report.levels[i];
    const AsymptoticRow& a = report.asymptotic[i];
    levels.push_back({{"n", l.n},
                      {"energy", l.energy},
                      {"parity", std::string(to_string(l.parity))},
                      {"block_size", l.block_size},
                      {"converged", l.converged},
                      {"asymptotic", a.asymptotic},
                      {"abs_error", a.abs_error},
                      {"rel_error", a.rel_error}});
  }
  doc["levels"] = std::move(levels);
  nlohmann::ordered_json refs = nlohmann::ordered_json::array();
  for (const ReferenceValue& r : report.references) {
    refs.push_back({{"n", r.n}, {"value", r.value}, {"source", r.source}});
  }
  doc["references"] = std::move(refs);
  os << doc.dump(2) << '\n';
}

void write_samples_csv(std::ostream& os, const SampledFunction& f) {
  os << "x,value\n";
  for (std::size_t i = 0; i < f.grid.size(); ++i) {
    os << io::format_double(f.grid[i]) << ',' << io::format_double(f.values[i]) << '\n';
  }
}

}  // namespace cauchywell
