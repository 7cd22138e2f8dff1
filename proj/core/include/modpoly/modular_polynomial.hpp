#pragma once

#include "modpoly/bigint.hpp"

#include <vector>

namespace modpoly {

/// Phi_ell(X, Y) = X^{ell+1} + Y^{ell+1} + sum_{0<=m,n<=ell} a_{m,n} X^m Y^n.
///
/// Only a_{m,n} with m >= n is stored; lookups are symmetric. The monic
/// terms are implicit. A fresh polynomial has every coefficient zero except
/// a_{ell,ell} = -1.
class ModularPolynomial {
 public:
  explicit ModularPolynomial(int ell);

  int ell() const { return ell_; }
  int monic_degree() const { return ell_ + 1; }

  /// a_{m,n} for 0 <= m, n <= ell (either order). Throws std::out_of_range.
  const BigInt& at(int m, int n) const;
  void set(int m, int n, BigInt value);

  /// Number of stored pairs (m >= n) = (ell+1)(ell+2)/2.
  std::size_t size() const { return entries_.size(); }

  /// a_{ell, ell-m} for m = 0..ell.
  std::vector<BigInt> top_row() const;

  friend bool operator==(const ModularPolynomial&, const ModularPolynomial&) = default;

 private:
  std::size_t index(int m, int n) const;

  int ell_;
  std::vector<BigInt> entries_;
};

}  // namespace modpoly
