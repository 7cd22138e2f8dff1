#include "modpoly/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace modpoly {

IntSeries::IntSeries(std::int64_t base, std::vector<BigInt> coeffs) : base_(base), coeffs_(std::move(coeffs)) {
  normalize();
}

void IntSeries::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) != 0; });
  const auto skipped = static_cast<std::int64_t>(first - coeffs_.begin());
  if (skipped == 0) return;
  coeffs_.erase(coeffs_.begin(), first);
  base_ += skipped;
}

IntSeries IntSeries::zero(std::int64_t precision) { return IntSeries(precision, {}); }

IntSeries IntSeries::constant(BigInt value, std::int64_t precision) {
  return monomial(std::move(value), 0, precision);
}

IntSeries IntSeries::monomial(BigInt value, std::int64_t exponent, std::int64_t precision) {
  if (exponent >= precision) return zero(precision);
  std::vector<BigInt> c(static_cast<std::size_t>(precision - exponent));
  c[0] = std::move(value);
  return IntSeries(exponent, std::move(c));
}

const BigInt& IntSeries::coefficient(std::int64_t k) const {
  static const BigInt kZero = 0;
  if (k >= precision()) {
    throw std::out_of_range("coefficient of q^" + std::to_string(k) + " is unknown (precision " +
                            std::to_string(precision()) + ")");
  }
  if (k < base_) return kZero;
  return coeffs_[static_cast<std::size_t>(k - base_)];
}

IntSeries IntSeries::truncated(std::int64_t new_precision) const {
  if (new_precision >= precision()) return *this;
  if (new_precision <= base_) return zero(new_precision);
  return IntSeries(base_, std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + (new_precision - base_)));
}

IntSeries IntSeries::dilated(std::int64_t factor) const {
  if (factor < 1) throw std::invalid_argument("dilation factor must be >= 1");
  if (factor == 1) return *this;
  if (is_zero()) return zero(precision() * factor);
  std::vector<BigInt> c(coeffs_.size() * static_cast<std::size_t>(factor));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * static_cast<std::size_t>(factor)] = coeffs_[i];
  return IntSeries(base_ * factor, std::move(c));
}

IntSeries IntSeries::operator-() const {
  std::vector<BigInt> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  IntSeries out;
  out.base_ = base_;
  out.coeffs_ = std::move(c);
  return out;
}

namespace {

template <typename Op>
IntSeries combine(const IntSeries& a, const IntSeries& b, Op op) {
  const std::int64_t prec = std::min(a.precision(), b.precision());
  const std::int64_t base = std::min({a.base_exponent(), b.base_exponent(), prec});
  std::vector<BigInt> c(static_cast<std::size_t>(prec - base));
  for (std::int64_t k = base; k < prec; ++k) {
    op(c[static_cast<std::size_t>(k - base)], a.coefficient(k), b.coefficient(k));
  }
  return IntSeries(base, std::move(c));
}

}  // namespace

IntSeries add(const IntSeries& a, const IntSeries& b) {
  return combine(a, b, [](BigInt& out, const BigInt& x, const BigInt& y) { out = x + y; });
}

IntSeries sub(const IntSeries& a, const IntSeries& b) {
  return combine(a, b, [](BigInt& out, const BigInt& x, const BigInt& y) { out = x - y; });
}

IntSeries scale(const IntSeries& a, const BigInt& factor) {
  std::vector<BigInt> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= factor;
  if (sgn(factor) == 0) return IntSeries::zero(a.precision());
  return IntSeries(a.base_exponent(), std::move(c));
}

IntSeries mul(const IntSeries& a, const IntSeries& b) {
  const std::int64_t base = a.base_exponent() + b.base_exponent();
  const std::int64_t prec = std::min(a.precision() + b.base_exponent(), b.precision() + a.base_exponent());
  if (a.is_zero() || b.is_zero() || prec <= base) return IntSeries::zero(prec);

  const auto len = static_cast<std::size_t>(prec - base);
  const auto ac = a.coeffs();
  const auto bc = b.coeffs();
  std::vector<BigInt> c(len);
  for (std::size_t i = 0; i < ac.size() && i < len; ++i) {
    if (sgn(ac[i]) == 0) continue;
    const std::size_t jmax = std::min(bc.size(), len - i);
    mpz_srcptr x = ac[i].get_mpz_t();
    for (std::size_t j = 0; j < jmax; ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), x, bc[j].get_mpz_t());
    }
  }
  return IntSeries(base, std::move(c));
}

IntSeries pow(const IntSeries& a, unsigned n) {
  if (n == 0) return IntSeries::constant(1, a.precision() - a.base_exponent());
  IntSeries result;
  bool have_result = false;
  IntSeries square = a;
  while (true) {
    if (n & 1u) {
      result = have_result ? mul(result, square) : square;
      have_result = true;
    }
    n >>= 1u;
    if (n == 0) break;
    square = mul(square, square);
  }
  return result;
}

IntSeries invert(const IntSeries& a, std::int64_t out_precision) {
  if (a.is_zero()) throw std::domain_error("cannot invert a series that is zero to its precision");
  const BigInt& lead = a.coeffs()[0];
  if (lead != 1 && lead != -1) {
    throw std::domain_error("leading coefficient " + to_decimal(lead) + " is not a unit in Z");
  }
  const std::int64_t base = -a.base_exponent();
  const std::int64_t relative = a.precision() - a.base_exponent();
  const std::int64_t prec = std::min(out_precision, base + relative);
  if (prec <= base) return IntSeries::zero(prec);

  const auto len = static_cast<std::size_t>(prec - base);
  const auto u = a.coeffs();
  std::vector<BigInt> v(len);
  v[0] = lead;
  BigInt acc;
  for (std::size_t k = 1; k < len; ++k) {
    acc = 0;
    const std::size_t imax = std::min(k, u.size() - 1);
    for (std::size_t i = 1; i <= imax; ++i) mpz_addmul(acc.get_mpz_t(), u[i].get_mpz_t(), v[k - i].get_mpz_t());
    // lead is its own inverse
    v[k] = -(acc * lead);
  }
  return IntSeries(base, std::move(v));
}

}  // namespace modpoly
