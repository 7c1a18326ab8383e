#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cauchywell/basis.hpp"
#include "cauchywell/eigensolver.hpp"

namespace cauchywell {

/// nπ/2 − π/8, the large-n law for the Cauchy well.
double asymptotic_energy(int n);

struct Level {
  int n = 0;  // 1-based label over both parities
  double energy = 0.0;
  Parity parity = Parity::Even;
  std::size_t block_size = 0;
  /// n <= block_size / 4
  bool converged = false;
};

struct AsymptoticRow {
  int n = 0;
  double asymptotic = 0.0;
  double abs_error = 0.0;
  /// |E_n - asymptotic| / E_n
  double rel_error = 0.0;
};

struct ReferenceValue {
  int n = 0;
  double value = 0.0;
  std::string source;
};

struct ReferenceDiff {
  int n = 0;
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  std::string source;
};

struct SpectrumReport {
  std::vector<Level> levels;
  std::vector<AsymptoticRow> asymptotic;
  std::vector<ReferenceValue> references;

  const Level& level(int n) const;
};

/// Interleave two ascending parity spectra into levels 1..count. Throws
/// StructureError if the merged parities do not alternate starting from
/// Even, ConfigError if count exceeds the available pairs.
SpectrumReport merge(const std::vector<EigenPair>& even, const std::vector<EigenPair>& odd,
                     std::size_t count);

/// Levels of one parity only, labelled by their place in the full
/// spectrum (even j -> n = 2j+1, odd j -> n = 2j+2).
SpectrumReport single_parity_report(const std::vector<EigenPair>& pairs, std::size_t count);

/// Per-level differences against external reference values.
std::vector<ReferenceDiff> compare_references(const SpectrumReport& report,
                                              const std::vector<ReferenceValue>& reference);

/// Published reference spectra of the Cauchy well obtained by other methods.
std::vector<ReferenceValue> kkms_reference();
std::vector<ReferenceValue> kwasnicki_reference();

struct SampledFunction {
  std::vector<double> grid;
  std::vector<double> values;
  int label = 0;
  /// Trapezoidal L2 norm over the grid.
  double normalization = 0.0;
};

/// Uniform grid of `points` nodes on [-1, 1] including both endpoints.
std::vector<double> uniform_grid(std::size_t points);

/// psi(x) = sum_k c_k phi_k(x); exactly 0 at x = +-1.
SampledFunction synthesize(const EigenPair& pair, const std::vector<double>& grid, int label = 0);

/// Strict sign changes on the open interval; |values| below `floor` are skipped.
int count_nodes(const SampledFunction& f, double floor = 1e-9);

/// 0.921749 sqrt((1 - x^2) cos(alpha x)), alpha = 1443 pi / 4096.
double ground_state_approximant(double x);

/// L2 normalization constant of sqrt((1 - x^2) cos(alpha x)) on (-1, 1).
double ground_state_approximant_norm_constant();

// CSV: n,energy,parity,block_size,asymptotic,rel_err_percent,energy_6dp
void write_report_csv(std::ostream& os, const SpectrumReport& report);
SpectrumReport read_report_csv(std::istream& is);

struct ReportMetadata {
  std::string tool_version;
  QuadratureSpec quad;
  std::string element_method;
};
void write_report_json(std::ostream& os, const SpectrumReport& report, const ReportMetadata& meta);

void write_samples_csv(std::ostream& os, const SampledFunction& f);

}  // namespace cauchywell
