#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace cauchywell {

enum class Parity { Even, Odd };

std::string_view to_string(Parity p);
/// Accepts "even"/"odd" (case-insensitive); throws ConfigError otherwise.
Parity parse_parity(std::string_view text);

/// One trigonometric basis function on (-1,1), orthonormal in L2(-1,1):
///   Even, k >= 0:  cos((2k+1) pi x / 2)
///   Odd,  k >= 1:  sin(k pi x)
struct BasisIndex {
  Parity parity = Parity::Even;
  int k = 0;

  /// Validating constructor; throws DomainError for Odd with k < 1 or Even with k < 0.
  static BasisIndex make(Parity parity, int k);

  /// Matrix slot of this mode within its parity block (Odd mode k lives at k-1).
  std::size_t slot() const;
  static BasisIndex from_slot(Parity parity, std::size_t slot);

  /// Angular frequency: (2k+1) pi/2 or k pi.
  double frequency() const;
  double value(double x) const;
  double derivative(double x) const;

  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

}  // namespace cauchywell
