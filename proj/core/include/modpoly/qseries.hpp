#pragma once

#include "modpoly/bigint.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace modpoly {

/// Truncated Laurent series in q with exact integer coefficients.
///
/// Stores the coefficients of q^base, q^{base+1}, ..., q^{precision-1}.
/// Everything at or above `precision` is unknown. The stored block is kept in
/// normal form: the first coefficient is nonzero, or the block is empty and
/// the series is zero to the stated precision (in which case base == precision).
///
/// Instances are immutable; every operation returns a new series.
class IntSeries {
 public:
  /// Zero known to precision 0.
  IntSeries() = default;

  /// Coefficients of q^base, q^{base+1}, ... ; precision = base + coeffs.size().
  IntSeries(std::int64_t base, std::vector<BigInt> coeffs);

  static IntSeries zero(std::int64_t precision);
  static IntSeries constant(BigInt value, std::int64_t precision);
  static IntSeries monomial(BigInt value, std::int64_t exponent, std::int64_t precision);

  std::int64_t base_exponent() const { return base_; }
  std::int64_t precision() const { return base_ + static_cast<std::int64_t>(coeffs_.size()); }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of q^k (zero below the support). Throws std::out_of_range
  /// when k >= precision().
  const BigInt& coefficient(std::int64_t k) const;

  /// Same series with precision lowered to `new_precision` (no-op if higher).
  IntSeries truncated(std::int64_t new_precision) const;

  /// f(q) -> f(q^factor), factor >= 1.
  IntSeries dilated(std::int64_t factor) const;

  IntSeries operator-() const;

  friend bool operator==(const IntSeries&, const IntSeries&) = default;

 private:
  void normalize();

  std::int64_t base_ = 0;
  std::vector<BigInt> coeffs_;
};

IntSeries add(const IntSeries& a, const IntSeries& b);
IntSeries sub(const IntSeries& a, const IntSeries& b);
IntSeries scale(const IntSeries& a, const BigInt& factor);

/// Cauchy product. Precision: min(a.precision + b.base, b.precision + a.base).
IntSeries mul(const IntSeries& a, const IntSeries& b);

/// a^n by square-and-multiply; a^0 is 1 to a's relative precision.
IntSeries pow(const IntSeries& a, unsigned n);

/// Multiplicative inverse to `out_precision` (clamped to what a's precision
/// supports). Throws std::domain_error if a is zero or its leading coefficient
/// is not +1 or -1.
IntSeries invert(const IntSeries& a, std::int64_t out_precision);

inline const BigInt& coefficient(const IntSeries& a, std::int64_t k) { return a.coefficient(k); }

inline IntSeries operator+(const IntSeries& a, const IntSeries& b) { return add(a, b); }
inline IntSeries operator-(const IntSeries& a, const IntSeries& b) { return sub(a, b); }
inline IntSeries operator*(const IntSeries& a, const IntSeries& b) { return mul(a, b); }

}  // namespace modpoly
