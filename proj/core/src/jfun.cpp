#include "modpoly/jfun.hpp"

#include <stdexcept>
#include <string>

namespace modpoly {

IntSeries euler_product(std::int64_t precision) {
  if (precision <= 0) return IntSeries::zero(precision);
  std::vector<BigInt> c(static_cast<std::size_t>(precision));
  // prod (1 - q^n) = sum_k (-1)^k q^{k(3k-1)/2}, k over all integers.
  for (std::int64_t k = 0;; ++k) {
    const std::int64_t plus = k * (3 * k - 1) / 2;
    const std::int64_t minus = k * (3 * k + 1) / 2;
    if (plus >= precision) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(plus)] += sign;
    if (k > 0 && minus < precision) c[static_cast<std::size_t>(minus)] += sign;
  }
  return IntSeries(0, std::move(c));
}

IntSeries delta_series(std::int64_t precision) {
  if (precision < 2) throw std::invalid_argument("delta_series needs precision >= 2");
  const IntSeries eta24 = pow(euler_product(precision - 1), 24);
  return mul(IntSeries::monomial(1, 1, precision), eta24);
}

IntSeries e4_series(std::int64_t precision) {
  if (precision < 1) throw std::invalid_argument("e4_series needs precision >= 1");
  std::vector<BigInt> sigma3(static_cast<std::size_t>(precision));
  for (std::int64_t d = 1; d < precision; ++d) {
    const BigInt cube = BigInt(static_cast<long>(d)) * d * d;
    for (std::int64_t n = d; n < precision; n += d) sigma3[static_cast<std::size_t>(n)] += cube;
  }
  sigma3[0] = 1;
  for (std::size_t n = 1; n < sigma3.size(); ++n) sigma3[n] *= 240;
  return IntSeries(0, std::move(sigma3));
}

JTable::JTable(std::vector<BigInt> values) : values_(std::move(values)) {
  if (values_.empty() || values_[0] != 1) throw std::invalid_argument("JTable requires c_{-1} = 1");
}

const BigInt& JTable::c(std::int64_t i) const {
  if (i < -1 || i >= count()) {
    throw std::out_of_range("j coefficient c_" + std::to_string(i) + " not available (have c_{-1}..c_" +
                            std::to_string(count() - 1) + ")");
  }
  return values_[static_cast<std::size_t>(i + 1)];
}

IntSeries JTable::series() const { return IntSeries(-1, values_); }

IntSeries JTable::shifted_series(std::int64_t order) const {
  if (order < 0) return IntSeries::zero(order + 1);
  require(order, "shifted j series");
  return IntSeries(0, std::vector<BigInt>(values_.begin(), values_.begin() + order + 1));
}

void JTable::require(std::int64_t needed, const char* who) const {
  if (count() < needed) {
    throw std::out_of_range(std::string(who) + " needs " + std::to_string(needed) +
                            " j coefficients beyond c_{-1}, table has " + std::to_string(count()));
  }
}

JTable j_coefficients(std::int64_t count) {
  if (count < 1) throw std::invalid_argument("j_coefficients needs count >= 1");
  // q*j = E4^3 / prod(1-q^n)^24, needed to precision count+1.
  const std::int64_t prec = count + 1;
  const IntSeries e4 = e4_series(prec);
  const IntSeries numerator = mul(mul(e4, e4), e4);
  const IntSeries eta24 = pow(euler_product(prec), 24);
  const IntSeries qj = mul(numerator, invert(eta24, prec));
  std::vector<BigInt> values(static_cast<std::size_t>(prec));
  for (std::int64_t k = 0; k < prec; ++k) values[static_cast<std::size_t>(k)] = qj.coefficient(k);
  return JTable(std::move(values));
}

}  // namespace modpoly
