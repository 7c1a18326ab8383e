#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cauchywell/basis.hpp"
#include "cauchywell/galerkin.hpp"

namespace cauchywell::cli {

enum class OutputFormat { Csv, Json };

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kInvalidConfig = 2,
  kQuadratureFailure = 3,
  kEigenFailure = 4,
};

struct RunConfig {
  std::size_t block_size = 30;
  std::optional<Parity> parity;  // nullopt = both
  std::size_t levels = 6;
  QuadratureSpec quad{};
  ElementMethod method = ElementMethod::Analytic;
  std::filesystem::path output_dir = ".";
  OutputFormat format = OutputFormat::Csv;
  unsigned threads = 0;  // 0 = auto

  /// Throws ConfigError on violated invariants.
  void validate() const;
};

/// Runs the command line `args` (without the program name). Results go to
/// files under --out; summaries to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cauchywell::cli
