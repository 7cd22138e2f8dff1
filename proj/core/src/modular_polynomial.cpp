#include "modpoly/modular_polynomial.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace modpoly {

ModularPolynomial::ModularPolynomial(int ell) : ell_(ell) {
  if (ell < 1) throw std::invalid_argument("ModularPolynomial: ell must be positive");
  entries_.resize(static_cast<std::size_t>(ell + 1) * static_cast<std::size_t>(ell + 2) / 2);
  entries_[index(ell, ell)] = -1;
}

std::size_t ModularPolynomial::index(int m, int n) const {
  if (m < n) std::swap(m, n);
  if (n < 0 || m > ell_) {
    throw std::out_of_range("coefficient index (" + std::to_string(m) + "," + std::to_string(n) +
                            ") outside 0.." + std::to_string(ell_));
  }
  return static_cast<std::size_t>(m) * static_cast<std::size_t>(m + 1) / 2 + static_cast<std::size_t>(n);
}

const BigInt& ModularPolynomial::at(int m, int n) const { return entries_[index(m, n)]; }

void ModularPolynomial::set(int m, int n, BigInt value) { entries_[index(m, n)] = std::move(value); }

std::vector<BigInt> ModularPolynomial::top_row() const {
  std::vector<BigInt> row;
  row.reserve(static_cast<std::size_t>(ell_) + 1);
  for (int m = 0; m <= ell_; ++m) row.push_back(at(ell_, ell_ - m));
  return row;
}

}  // namespace modpoly
