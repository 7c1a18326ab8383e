#include "cauchywell/galerkin.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "cauchywell/error.hpp"
#include "cauchywell/io.hpp"
#include "cauchywell/specfun.hpp"

namespace cauchywell {

using std::numbers::pi;

GalerkinBlock::GalerkinBlock(Parity parity, std::size_t n, QuadratureSpec quad,
                             ElementMethod method)
    : parity_(parity), n_(n), quad_(quad), method_(method), lower_(n * (n + 1) / 2, 0.0) {}

std::size_t GalerkinBlock::packed(std::size_t i, std::size_t j) {
  if (i < j) std::swap(i, j);
  return i * (i + 1) / 2 + j;
}

double GalerkinBlock::operator()(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw std::out_of_range("GalerkinBlock: index out of range");
  return lower_[packed(i, j)];
}

void GalerkinBlock::set(std::size_t i, std::size_t j, double v) {
  if (i >= n_ || j >= n_) throw std::out_of_range("GalerkinBlock: index out of range");
  lower_[packed(i, j)] = v;
}

Matrix GalerkinBlock::to_matrix() const {
  Matrix m(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const double v = lower_[packed(i, j)];
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

namespace {

QuadratureResult integrate_image(const BasisIndex& image, const BasisIndex& test,
                                 const QuadratureSpec& quad) {
  quad.validate();
  return integrate_interval([&](double x) { return apply_basis(image, x) * test.value(x); }, quad);
}

}  // namespace

QuadratureResult element_quadrature(Parity parity, int k, int i, const QuadratureSpec& quad) {
  return integrate_image(BasisIndex::make(parity, k), BasisIndex::make(parity, i), quad);
}

double element(Parity parity, int k, int i, const QuadratureSpec& quad) {
  const BasisIndex row = BasisIndex::make(parity, std::max(k, i));
  const BasisIndex col = BasisIndex::make(parity, std::min(k, i));
  if (row == col) return rayleigh_quotient(row);
  return integrate_image(row, col, quad).value;
}

double element_analytic(Parity parity, int k, int i) {
  const BasisIndex bk = BasisIndex::make(parity, std::max(k, i));
  const BasisIndex bi = BasisIndex::make(parity, std::min(k, i));
  if (bk == bi) return rayleigh_quotient(bk);
  const double a = bk.frequency();
  const double b = bi.frequency();
  const double sign = ((bk.k + bi.k) % 2 == 0) ? 1.0 : -1.0;
  // Cin(2b) - Cin(2a) with the Euler constants cancelled.
  const double cin_diff = std::log(b / a) - specfun::ci(2.0 * b) + specfun::ci(2.0 * a);
  return 2.0 * a * b * sign * cin_diff / (pi * (a - b) * (a + b));
}

double element_by_oracle(Parity parity, int k, int i, const HypersingularLimitSpec& lim) {
  const BasisIndex image = BasisIndex::make(parity, k);
  const BasisIndex test = BasisIndex::make(parity, i);
  const SmoothProfile psi = SmoothProfile::from_basis(image);
  QuadratureSpec outer;
  outer.rel_tol = 1e-9;
  outer.abs_tol = 1e-10;
  // The operator image is only logarithmic at the ends and the test function
  // vanishes linearly there, so a shallow graded mesh is enough; deeper
  // levels would push the symmetric window below rounding resolution.
  outer.graded_levels = 20;
  return integrate_interval([&](double x) { return apply_oracle(psi, x, lim) * test.value(x); },
                            outer)
      .value;
}

GalerkinBlock assemble(Parity parity, std::size_t n, const AssemblyOptions& opts) {
  if (n < 1) throw ConfigError("assemble: block size must be >= 1");
  opts.quad.validate();
  GalerkinBlock block(parity, n, opts.quad, opts.method);

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(opts.threads == 0 ? hw : opts.threads, n));

  // Row r goes to worker r % threads; rows grow in cost, so striding balances.
  std::vector<std::exception_ptr> failures(n);
  auto work = [&](unsigned worker) {
    for (std::size_t r = worker; r < n; r += threads) {
      try {
        const int kr = BasisIndex::from_slot(parity, r).k;
        for (std::size_t c = 0; c <= r; ++c) {
          const int kc = BasisIndex::from_slot(parity, c).k;
          double v = 0.0;
          try {
            v = opts.method == ElementMethod::Analytic ? element_analytic(parity, kr, kc)
                                                       : element(parity, kr, kc, opts.quad);
          } catch (const QuadratureError& e) {
            throw QuadratureError(std::string(e.what()) + " (element k=" + std::to_string(kr) +
                                      ", i=" + std::to_string(kc) + ")",
                                  e.estimate(), e.error_bound());
          }
          block.set(r, c, v);
        }
      } catch (...) {
        failures[r] = std::current_exception();
      }
    }
  };

  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return block;
}

void write_block_csv(std::ostream& os, const GalerkinBlock& block) {
  os << "parity,n,rel_tol\n";
  os << to_string(block.parity()) << ',' << block.size() << ','
     << io::format_double(block.quad().rel_tol) << '\n';
  for (double v : block.lower_triangle()) os << io::format_double(v) << '\n';
}

GalerkinBlock read_block_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "parity,n,rel_tol") {
    throw ConfigError("block csv: missing 'parity,n,rel_tol' header");
  }
  if (!std::getline(is, line)) throw ConfigError("block csv: missing metadata row");
  const auto fields = io::split(line);
  if (fields.size() != 3) throw ConfigError("block csv: metadata row needs 3 fields");
  QuadratureSpec quad;
  quad.rel_tol = io::parse_double(fields[2]);
  const auto n = static_cast<std::size_t>(io::parse_integer(fields[1]));
  GalerkinBlock block(parse_parity(fields[0]), n, quad, ElementMethod::Analytic);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c <= r; ++c) {
      if (!std::getline(is, line)) throw ConfigError("block csv: truncated value list");
      block.set(r, c, io::parse_double(line));
    }
  }
  return block;
}

}  // namespace cauchywell
