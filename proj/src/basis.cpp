#include "cauchywell/basis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "cauchywell/error.hpp"

namespace cauchywell {

std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity parse_parity(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "even") return Parity::Even;
  if (lower == "odd") return Parity::Odd;
  throw ConfigError("unknown parity '" + std::string(text) + "'");
}

BasisIndex BasisIndex::make(Parity parity, int k) {
  if (parity == Parity::Odd && k < 1) throw DomainError("odd basis index requires k >= 1");
  if (parity == Parity::Even && k < 0) throw DomainError("even basis index requires k >= 0");
  return {parity, k};
}

std::size_t BasisIndex::slot() const {
  return static_cast<std::size_t>(parity == Parity::Odd ? k - 1 : k);
}

BasisIndex BasisIndex::from_slot(Parity parity, std::size_t slot) {
  const int s = static_cast<int>(slot);
  return {parity, parity == Parity::Odd ? s + 1 : s};
}

double BasisIndex::frequency() const {
  return parity == Parity::Even ? (2.0 * k + 1.0) * std::numbers::pi / 2.0 : k * std::numbers::pi;
}

double BasisIndex::value(double x) const {
  const double w = frequency();
  return parity == Parity::Even ? std::cos(w * x) : std::sin(w * x);
}

double BasisIndex::derivative(double x) const {
  const double w = frequency();
  return parity == Parity::Even ? -w * std::sin(w * x) : w * std::cos(w * x);
}

}  // namespace cauchywell
