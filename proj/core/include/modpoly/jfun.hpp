#pragma once

#include "modpoly/bigint.hpp"
#include "modpoly/qseries.hpp"

#include <cstdint>
#include <vector>

namespace modpoly {

/// Euler's product prod_{n>=1} (1 - q^n) to `precision`, built from the
/// pentagonal number theorem.
IntSeries euler_product(std::int64_t precision);

/// Delta = q * prod (1 - q^n)^24 to absolute precision `precision` (>= 2).
IntSeries delta_series(std::int64_t precision);

/// E4 = 1 + 240 * sum sigma_3(n) q^n to precision `precision` (>= 1).
IntSeries e4_series(std::int64_t precision);

/// Fourier coefficients c_{-1} = 1, c_0 = 744, c_1 = 196884, ... of the
/// modular invariant j. This is the only place the c_{-1} = 1 normalisation
/// lives; every formula reads it through `c(-1)`.
class JTable {
 public:
  /// `values[i]` is c_{i-1}; values[0] must be 1.
  explicit JTable(std::vector<BigInt> values);

  /// Number of coefficients available beyond index -1, i.e. c_0..c_{count-1}.
  std::int64_t count() const { return static_cast<std::int64_t>(values_.size()) - 1; }

  /// c_i for -1 <= i < count(). Throws std::out_of_range otherwise.
  const BigInt& c(std::int64_t i) const;

  /// j(z) = sum c_i q^i with precision count().
  IntSeries series() const;

  /// sum_{i=0}^{order} c_{i-1} q^i (that is q*j(z) truncated), precision order+1.
  /// Throws std::out_of_range if order > count().
  IntSeries shifted_series(std::int64_t order) const;

  /// Throws std::out_of_range with a descriptive message unless count() >= needed.
  void require(std::int64_t needed, const char* who) const;

  friend bool operator==(const JTable&, const JTable&) = default;

 private:
  std::vector<BigInt> values_;
};

/// c_{-1} .. c_{count-1} of j = E4^3 / Delta. count >= 1.
JTable j_coefficients(std::int64_t count);

}  // namespace modpoly
