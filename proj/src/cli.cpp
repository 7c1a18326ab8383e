#include "cauchywell/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>

#include "cauchywell/cauchy_operator.hpp"
#include "cauchywell/error.hpp"
#include "cauchywell/io.hpp"
#include "cauchywell/pipeline.hpp"
#include "cauchywell/specfun.hpp"
#include "cauchywell/spectrum.hpp"

#ifndef CAUCHYWELL_VERSION
#define CAUCHYWELL_VERSION "0.0.0"
#endif

namespace cauchywell::cli {

namespace fs = std::filesystem;

void RunConfig::validate() const {
  if (block_size < 1) throw ConfigError("--size must be >= 1");
  if (levels < 1) throw ConfigError("--levels must be >= 1");
  if (!parity && levels > 2 * block_size) {
    throw ConfigError("--levels must not exceed 2 x --size when both parities are solved");
  }
  if (parity && levels > block_size) {
    throw ConfigError("--levels must not exceed --size for a single parity");
  }
  quad.validate();
}

namespace {

using Cell = std::variant<std::string, double, long long>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* d = std::get_if<double>(&c)) return io::format_double(*d);
  return std::to_string(std::get<long long>(c));
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw ConfigError("output directory '" + dir.string() + "' cannot be created");
  }
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw ConfigError("cannot open '" + path.string() + "' for writing");
  return os;
}

void check_written(std::ofstream& os, const fs::path& path) {
  os.flush();
  if (!os) throw ConfigError("failed writing '" + path.string() + "'");
}

fs::path write_table(const fs::path& dir, const std::string& stem, const Table& table,
                     OutputFormat format) {
  ensure_dir(dir);
  const fs::path path = dir / (stem + (format == OutputFormat::Csv ? ".csv" : ".json"));
  std::ofstream os = open_output(path);
  if (format == OutputFormat::Csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      os << (i ? "," : "") << table.columns[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
      os << '\n';
    }
  } else {
    nlohmann::ordered_json doc;
    doc["tool_version"] = CAUCHYWELL_VERSION;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::visit([&](const auto& v) { obj[table.columns[i]] = v; }, row[i]);
      }
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << '\n';
  }
  check_written(os, path);
  return path;
}

PipelineOptions pipeline_options(const RunConfig& cfg) {
  PipelineOptions opts;
  opts.assembly.quad = cfg.quad;
  opts.assembly.method = cfg.method;
  opts.assembly.threads = cfg.threads;
  return opts;
}

std::string method_name(ElementMethod m) {
  return m == ElementMethod::Analytic ? "analytic" : "quadrature";
}

void print_levels(std::ostream& out, const SpectrumReport& report) {
  out << std::setw(5) << "n" << "  " << std::left << std::setw(6) << "parity" << std::right
      << "  " << std::setw(14) << "energy" << "  " << std::setw(12) << "asymptotic" << "  "
      << std::setw(9) << "rel.err %" << '\n';
  for (std::size_t i = 0; i < report.levels.size(); ++i) {
    const Level& l = report.levels[i];
    const AsymptoticRow& a = report.asymptotic[i];
    std::ostringstream line;
    line << std::setw(5) << l.n << "  " << std::left << std::setw(6) << to_string(l.parity)
         << "  " << std::right << std::setw(14) << io::format_fixed(l.energy, 8) << "  "
         << std::setw(12) << io::format_fixed(a.asymptotic, 6) << "  " << std::setw(9)
         << io::format_double(100.0 * a.rel_error, 3) << (l.converged ? "" : "  (unconverged)");
    out << line.str() << '\n';
  }
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  cfg.validate();
  ensure_dir(cfg.output_dir);
  SpectrumReport report = solve_spectrum(cfg.block_size, cfg.levels, cfg.parity, pipeline_options(cfg));
  report.references = kkms_reference();
  report.references.erase(
      std::remove_if(report.references.begin(), report.references.end(),
                     [&](const ReferenceValue& r) {
                       return std::none_of(report.levels.begin(), report.levels.end(),
                                           [&](const Level& l) { return l.n == r.n; });
                     }),
      report.references.end());

  fs::path path;
  if (cfg.format == OutputFormat::Csv) {
    path = cfg.output_dir / "spectrum.csv";
    std::ofstream os = open_output(path);
    write_report_csv(os, report);
    check_written(os, path);
  } else {
    path = cfg.output_dir / "spectrum.json";
    std::ofstream os = open_output(path);
    write_report_json(os, report, {CAUCHYWELL_VERSION, cfg.quad, method_name(cfg.method)});
    check_written(os, path);
  }
  out << "block size " << cfg.block_size << ", " << report.levels.size() << " levels -> "
      << path.string() << '\n';
  print_levels(out, report);
  return kOk;
}

std::vector<Cell> energy_row(const std::string& label, const SpectrumReport& report) {
  std::vector<Cell> row{label};
  for (const Level& l : report.levels) row.emplace_back(l.energy);
  return row;
}

int cmd_table(const RunConfig& base, const std::string& which, std::vector<std::size_t> sizes,
              std::ostream& out) {
  RunConfig cfg = base;
  cfg.parity.reset();
  const PipelineOptions opts = pipeline_options(cfg);
  cfg.quad.validate();
  for (std::size_t s : sizes) {
    if (s < 1) throw ConfigError("table sizes must be >= 1");
  }
  Table table;

  if (which == "I") {
    if (sizes.empty()) sizes = {6, 12};
    table.columns = {"row", "E1", "E2", "E3", "E4", "E5", "E6"};
    std::vector<Cell> diag{std::string("diagonal")};
    for (int n = 1; n <= 6; ++n) {
      const Parity p = (n % 2 == 1) ? Parity::Even : Parity::Odd;
      const int k = (n % 2 == 1) ? (n - 1) / 2 : n / 2;
      diag.emplace_back(rayleigh_quotient(BasisIndex::make(p, k)));
    }
    table.rows.push_back(diag);
    for (std::size_t s : sizes) {
      if (2 * s < 6) throw ConfigError("table I needs sizes >= 3");
      const SpectrumReport report = solve_spectrum(s, 6, opts);
      table.rows.push_back(
          energy_row("E_" + std::to_string(s) + "x" + std::to_string(s), report));
    }
    for (const auto& ref : {kwasnicki_reference(), kkms_reference()}) {
      std::vector<Cell> row{ref.front().source};
      for (int n = 1; n <= 6; ++n) row.emplace_back(ref[static_cast<std::size_t>(n - 1)].value);
      table.rows.push_back(row);
    }
  } else if (which == "II") {
    if (sizes.empty()) sizes = {30, 50, 100, 200, 400};
    table.columns = {"size", "E1", "E2", "E3", "E4", "E5", "E6"};
    for (std::size_t s : sizes) {
      if (2 * s < 6) throw ConfigError("table II needs sizes >= 3");
      const SpectrumReport report = solve_spectrum(s, 6, opts);
      std::vector<Cell> row{static_cast<long long>(s)};
      for (const Level& l : report.levels) row.emplace_back(l.energy);
      table.rows.push_back(row);
    }
  } else if (which == "III") {
    if (sizes.empty()) sizes = {2000};
    table.columns = {"size", "n", "energy", "asymptotic", "rel_err_percent", "kkms", "converged"};
    const std::vector<int> labels{1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12,
                                  13, 14, 15, 16, 17, 18, 19, 20, 30, 50, 100};
    const auto kkms = kkms_reference();
    for (std::size_t s : sizes) {
      const int top = static_cast<int>(std::min<std::size_t>(2 * s, 100));
      const SpectrumReport report = solve_spectrum(s, static_cast<std::size_t>(top), opts);
      for (int n : labels) {
        if (n > top) break;
        const Level& l = report.level(n);
        const AsymptoticRow& a = report.asymptotic[static_cast<std::size_t>(n - 1)];
        Cell ref = std::string("*");
        for (const auto& r : kkms) {
          if (r.n == n) ref = r.value;
        }
        table.rows.push_back({static_cast<long long>(s), static_cast<long long>(n), l.energy,
                              a.asymptotic, 100.0 * a.rel_error, ref,
                              std::string(l.converged ? "yes" : "no")});
      }
    }
  } else {
    throw ConfigError("--which must be one of I, II, III");
  }

  const fs::path path = write_table(cfg.output_dir, "table_" + which, table, cfg.format);
  out << "table " << which << " -> " << path.string() << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "  " : "  ");
      if (const auto* d = std::get_if<double>(&row[i])) {
        out << io::format_fixed(*d, 6);
      } else {
        out << cell_text(row[i]);
      }
    }
    out << '\n';
  }
  return kOk;
}

int cmd_eigfun(const RunConfig& cfg, int level, std::size_t grid_points, std::ostream& out) {
  if (cfg.block_size < 1) throw ConfigError("--size must be >= 1");
  cfg.quad.validate();
  if (grid_points < 2) throw ConfigError("--grid must be >= 2");
  if (level < 1 || static_cast<std::size_t>(level) > 2 * cfg.block_size) {
    throw ConfigError("--level must lie in [1, 2 x --size]");
  }
  ensure_dir(cfg.output_dir);
  const EigenPair pair = eigenpair_for_level(cfg.block_size, level, pipeline_options(cfg));
  const SampledFunction f = synthesize(pair, uniform_grid(grid_points), level);
  const fs::path path = cfg.output_dir / ("eigfun_" + std::to_string(level) + ".csv");
  std::ofstream os = open_output(path);
  write_samples_csv(os, f);
  check_written(os, path);
  out << "level " << level << " (" << to_string(pair.parity) << ", E = "
      << io::format_fixed(pair.value, 8) << ", nodes = " << count_nodes(f)
      << ", norm = " << io::format_fixed(f.normalization, 8) << ") -> " << path.string() << '\n';
  return kOk;
}

int cmd_disprove(const RunConfig& cfg, const std::string& which, std::size_t grid_points,
                 double extent, std::ostream& out) {
  if (grid_points < 101) throw ConfigError("--grid must be >= 101 for disprove");
  if (!(extent > 0.0 && extent < 1.0)) throw ConfigError("--extent must lie in (0, 1)");
  TrigCandidate cand;
  if (which == "cos-half") {
    cand = TrigCandidate::CosHalf;
  } else if (which == "sin-pi") {
    cand = TrigCandidate::SinPi;
  } else {
    throw ConfigError("--which must be cos-half or sin-pi");
  }
  std::vector<double> grid(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    grid[i] = -extent + 2.0 * extent * static_cast<double>(i) / static_cast<double>(grid_points - 1);
  }
  grid.back() = extent;
  const DisproofResult res = trig_disproof_residual(cand, grid);
  const auto it = std::max_element(res.residuals.begin(), res.residuals.end());
  const std::size_t at = static_cast<std::size_t>(it - res.residuals.begin());

  ensure_dir(cfg.output_dir);
  const fs::path path = cfg.output_dir / ("disprove_" + which + ".csv");
  std::ofstream os = open_output(path);
  os << "# candidate=" << which << " best_fit_E=" << io::format_double(res.best_fit_energy)
     << " max_residual=" << io::format_double(*it) << " at_x=" << io::format_double(grid[at])
     << '\n';
  os << "x,residual\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    os << io::format_double(grid[i]) << ',' << io::format_double(res.residuals[i]) << '\n';
  }
  check_written(os, path);
  out << which << ": best-fit E = " << io::format_fixed(res.best_fit_energy, 8)
      << ", max residual " << io::format_fixed(*it, 6) << " at x = " << io::format_fixed(grid[at], 4)
      << " -> " << path.string() << '\n';
  return kOk;
}

int cmd_apply(const std::string& parity_text, int mode, double x, bool with_oracle,
              std::ostream& out) {
  const BasisIndex b = BasisIndex::make(parse_parity(parity_text), mode);
  const double closed = apply_basis(b, x);
  out << "closed_form " << io::format_double(closed) << '\n';
  if (with_oracle) {
    const OracleResult r = apply_oracle_detailed(SmoothProfile::from_basis(b), x);
    out << "oracle " << io::format_double(r.value) << " residual " << io::format_double(r.residual)
        << '\n';
  }
  return kOk;
}

int cmd_specfun(double x, std::ostream& out) {
  out << "Si " << io::format_double(specfun::si(x)) << '\n';
  if (x > 0.0) {
    out << "Ci " << io::format_double(specfun::ci(x)) << '\n';
  } else {
    out << "Ci undefined (x <= 0)\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectrum of the Cauchy operator |Delta|^(1/2) in the interval (-1,1)", "cauchywell"};
  app.set_version_flag("--version", CAUCHYWELL_VERSION);
  app.require_subcommand(1);

  RunConfig cfg;
  std::string parity_text = "both";
  std::string format_text = "csv";
  std::string method_text = "analytic";
  std::string out_dir = ".";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--quad-rel-tol", cfg.quad.rel_tol, "Relative quadrature tolerance");
    sub->add_option("--endpoint-margin", cfg.quad.endpoint_margin,
                    "Boundary layer width for graded quadrature");
    sub->add_option("--method", method_text, "Element method: analytic | quadrature");
    sub->add_option("--out", out_dir, "Output directory");
    sub->add_option("--format", format_text, "Output format: csv | json");
    sub->add_option("--threads", cfg.threads, "Assembly threads (0 = auto)");
  };

  auto* solve = app.add_subcommand("solve", "Assemble, diagonalize and write the merged spectrum");
  solve->add_option("--size", cfg.block_size, "Block size per parity");
  solve->add_option("--parity", parity_text, "even | odd | both");
  solve->add_option("--levels", cfg.levels, "Number of levels to report");
  add_common(solve);

  std::string which;
  std::vector<std::size_t> sizes;
  auto* table = app.add_subcommand("table", "Emit the comparison tables I, II or III");
  table->add_option("--which", which, "I | II | III")->required();
  table->add_option("--sizes", sizes, "Block sizes")->delimiter(',');
  add_common(table);

  int level = 1;
  std::size_t grid_points = 2001;
  auto* eigfun = app.add_subcommand("eigfun", "Sample one eigenfunction on a uniform grid");
  eigfun->add_option("--size", cfg.block_size, "Block size per parity");
  eigfun->add_option("--level", level, "Level label n (1-based)");
  eigfun->add_option("--grid", grid_points, "Grid points including endpoints");
  add_common(eigfun);

  std::string candidate;
  double extent = 0.99;
  std::size_t disprove_grid = 199;
  auto* disprove = app.add_subcommand("disprove", "Residual of cos(pi x/2) or sin(pi x) as eigenfunction");
  disprove->add_option("--which", candidate, "cos-half | sin-pi")->required();
  disprove->add_option("--grid", disprove_grid, "Grid points on [-extent, extent]");
  disprove->add_option("--extent", extent, "Half-width of the sampling grid");
  disprove->add_option("--out", out_dir, "Output directory");

  std::string apply_parity = "even";
  int mode = 0;
  double apply_x = 0.0;
  bool with_oracle = false;
  auto* apply = app.add_subcommand("apply", "Apply the operator to one basis function at x");
  apply->add_option("--parity", apply_parity, "even | odd");
  apply->add_option("--mode", mode, "Mode index k");
  apply->add_option("--x", apply_x, "Point in (-1, 1)");
  apply->add_flag("--oracle", with_oracle, "Also evaluate the epsilon-limit oracle");

  double specfun_x = 0.0;
  auto* specfun_eval = app.add_subcommand("specfun-eval", "Print Si(x) and Ci(x)");
  specfun_eval->add_option("x", specfun_x)->required();
  specfun_eval->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << CAUCHYWELL_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }

  try {
    cfg.output_dir = out_dir;
    if (format_text == "csv") {
      cfg.format = OutputFormat::Csv;
    } else if (format_text == "json") {
      cfg.format = OutputFormat::Json;
    } else {
      throw ConfigError("--format must be csv or json");
    }
    if (method_text == "analytic") {
      cfg.method = ElementMethod::Analytic;
    } else if (method_text == "quadrature") {
      cfg.method = ElementMethod::Quadrature;
    } else {
      throw ConfigError("--method must be analytic or quadrature");
    }
    if (parity_text == "both") {
      cfg.parity.reset();
    } else {
      cfg.parity = parse_parity(parity_text);
    }

    if (*solve) return cmd_solve(cfg, out);
    if (*table) return cmd_table(cfg, which, sizes, out);
    if (*eigfun) return cmd_eigfun(cfg, level, grid_points, out);
    if (*disprove) return cmd_disprove(cfg, candidate, disprove_grid, extent, out);
    if (*apply) return cmd_apply(apply_parity, mode, apply_x, with_oracle, out);
    if (*specfun_eval) return cmd_specfun(specfun_x, out);
    return kInvalidConfig;
  } catch (const QuadratureError& e) {
    err << "quadrature failure: " << e.what() << '\n';
    return kQuadratureFailure;
  } catch (const ConvergenceError& e) {
    err << "convergence failure: " << e.what() << '\n';
    return kQuadratureFailure;
  } catch (const EigenError& e) {
    err << "eigensolver failure: " << e.what() << '\n';
    return kEigenFailure;
  } catch (const StructureError& e) {
    err << "eigensolver failure: " << e.what() << '\n';
    return kEigenFailure;
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace cauchywell::cli
