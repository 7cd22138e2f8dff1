#include "modpoly/solver.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace modpoly {

namespace {

// The series j(ell z)^r j(z)^s for 0 <= r, s <= ell + 1.
class ProductTable {
 public:
  ProductTable(int ell, const JTable& j) : ell_(ell) {
    const IntSeries jz = j.series();
    const IntSeries jl = jz.dilated(ell);
    std::vector<IntSeries> pz{pow(jz, 0)};
    std::vector<IntSeries> pl{pow(jl, 0)};
    for (int i = 1; i <= ell + 1; ++i) {
      pz.push_back(mul(pz.back(), jz));
      pl.push_back(mul(pl.back(), jl));
    }
    const auto side = static_cast<std::size_t>(ell + 2);
    table_.resize(side * side);
    for (int r = 0; r <= ell + 1; ++r) {
      for (int s = 0; s <= ell + 1; ++s) {
        if ((r == ell + 1 && s != 0) || (s == ell + 1 && r != 0)) continue;
        table_[slot(r, s)] = mul(pl[static_cast<std::size_t>(r)], pz[static_cast<std::size_t>(s)]);
        precision_ = std::min(precision_, table_[slot(r, s)].precision());
      }
    }
  }

  const IntSeries& get(int r, int s) const { return table_[slot(r, s)]; }

  /// Everything below this exponent is known for every product.
  std::int64_t precision() const { return precision_; }

 private:
  std::size_t slot(int r, int s) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(ell_ + 2) + static_cast<std::size_t>(s);
  }

  int ell_;
  std::vector<IntSeries> table_;
  std::int64_t precision_ = INT64_MAX;
};

IntSeries evaluate(const ModularPolynomial& poly, const ProductTable& products) {
  const int ell = poly.ell();
  IntSeries total = add(products.get(ell + 1, 0), products.get(0, ell + 1));
  for (int r = 0; r <= ell; ++r) {
    for (int s = 0; s <= ell; ++s) {
      const BigInt& a = poly.at(r, s);
      if (sgn(a) != 0) total = add(total, scale(products.get(r, s), a));
    }
  }
  return total.truncated(products.precision());
}

}  // namespace

IntSeries evaluate_on_j(const ModularPolynomial& poly, const JTable& j) {
  return evaluate(poly, ProductTable(poly.ell(), j));
}

ModularPolynomial solve_full_polynomial(int ell, const JTable& j) {
  if (!is_prime(ell)) throw std::invalid_argument("solve_full_polynomial: ell must be prime");
  j.require(solver_min_j_count(ell), "solve_full_polynomial");

  const ProductTable products(ell, j);
  const std::int64_t lowest = -std::int64_t{ell} * ell - ell;
  const std::int64_t working = products.precision();

  // Unknown a_{m,n} (m >= n) first shows up at q^{-ell m - n}, through
  // j(ell z)^m j(z)^n with leading coefficient 1; the mirrored product starts
  // strictly later. Walking k upward therefore meets each unknown exactly
  // when its equation becomes triangular.
  struct Unknown {
    int m;
    int n;
  };
  std::vector<Unknown> leading(static_cast<std::size_t>(-lowest) + 1, Unknown{-1, -1});
  for (int m = 0; m <= ell; ++m) {
    for (int n = 0; n <= m; ++n) {
      if (m == ell && n == ell) continue;
      const std::int64_t k = -std::int64_t{ell} * m - n;
      leading[static_cast<std::size_t>(k - lowest)] = Unknown{m, n};
    }
  }

  ModularPolynomial poly(ell);
  std::vector<std::vector<bool>> solved(static_cast<std::size_t>(ell) + 1, std::vector<bool>(static_cast<std::size_t>(ell) + 1));
  solved[static_cast<std::size_t>(ell)][static_cast<std::size_t>(ell)] = true;

  auto residual_at = [&](std::int64_t k) {
    BigInt acc = products.get(ell + 1, 0).coefficient(k) + products.get(0, ell + 1).coefficient(k);
    for (int r = 0; r <= ell; ++r) {
      for (int s = 0; s <= ell; ++s) {
        const auto hi = static_cast<std::size_t>(std::max(r, s));
        const auto lo = static_cast<std::size_t>(std::min(r, s));
        if (!solved[hi][lo]) continue;
        const BigInt& a = poly.at(r, s);
        if (sgn(a) != 0) mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), products.get(r, s).coefficient(k).get_mpz_t());
      }
    }
    return acc;
  };

  for (std::int64_t k = lowest; k <= 0; ++k) {
    const BigInt residual = residual_at(k);
    const Unknown u = leading[static_cast<std::size_t>(k - lowest)];
    if (u.m < 0) {
      if (sgn(residual) != 0) {
        throw InconsistentSystem("inconsistent system: q^" + std::to_string(k) + " coefficient cannot vanish");
      }
      continue;
    }
    BigInt pivot = products.get(u.m, u.n).coefficient(k);
    if (u.m != u.n) pivot += products.get(u.n, u.m).coefficient(k);
    if (sgn(pivot) == 0) throw InconsistentSystem("inconsistent system: zero pivot at q^" + std::to_string(k));
    Rational value(-residual, pivot);
    value.canonicalize();
    if (value.get_den() != 1) {
      throw InconsistentSystem("inconsistent system: non-integral a_{" + std::to_string(u.m) + "," +
                               std::to_string(u.n) + "} = " + value.get_str());
    }
    poly.set(u.m, u.n, value.get_num());
    solved[static_cast<std::size_t>(u.m)][static_cast<std::size_t>(u.n)] = true;
  }

  for (std::int64_t k = 1; k < working; ++k) {
    if (sgn(residual_at(k)) != 0) {
      throw InconsistentSystem("solved polynomial leaves a nonzero q^" + std::to_string(k) + " coefficient");
    }
  }
  return poly;
}

}  // namespace modpoly
