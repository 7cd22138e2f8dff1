#include "modpoly/recurrence.hpp"

#include "modpoly/comb.hpp"
#include "modpoly/qseries.hpp"

#include <stdexcept>
#include <string>

namespace modpoly {

BigInt jhat_power_coeff(unsigned N, std::int64_t k, const JTable& j) {
  if (k < 0) return 0;
  return pow(j.shifted_series(k), N).coefficient(k);
}

std::vector<BigInt> recurrence_row(int ell, int m_max, const JTable& j) {
  if (ell < 3 || !is_prime(ell)) throw std::invalid_argument("recurrence needs a prime ell >= 3");
  if (m_max < 0 || m_max > ell) throw std::invalid_argument("recurrence: m_max out of range");
  std::vector<BigInt> row(static_cast<std::size_t>(m_max) + 1);
  row[0] = -1;
  if (m_max == 0) return row;
  j.require(m_max, "coeff_recurrence");

  // powers[N - lowest] holds coefficients 0..m_max of (q j)^N truncated.
  const IntSeries hat = j.shifted_series(m_max);
  const int lowest = ell - m_max + 1;
  std::vector<IntSeries> powers;
  powers.reserve(static_cast<std::size_t>(m_max));
  powers.push_back(pow(hat, static_cast<unsigned>(lowest)));
  for (int N = lowest + 1; N <= ell; ++N) powers.push_back(mul(powers.back(), hat));
  auto power_coeff = [&](int N, int k) -> const BigInt& { return powers[static_cast<std::size_t>(N - lowest)].coefficient(k); };

  for (int m = 1; m <= m_max; ++m) {
    BigInt acc = 0;
    for (int n = 0; n < m; ++n) {
      mpz_addmul(acc.get_mpz_t(), row[static_cast<std::size_t>(n)].get_mpz_t(), power_coeff(ell - n, m - n).get_mpz_t());
    }
    acc = -acc;
    if (m == ell) acc -= BigInt(ell + 1) * j.c(0);
    row[static_cast<std::size_t>(m)] = std::move(acc);
  }
  return row;
}

BigInt coeff_recurrence(int ell, int m, const JTable& j) {
  if (m < 0 || m > ell) throw std::invalid_argument("coeff_recurrence: m out of range");
  return recurrence_row(ell, m, j).back();
}

Rational d_weight(const DWeight& w, std::span<const int> t_full) {
  if (w.r.size() != w.t1.size() || w.r.size() != t_full.size()) {
    throw std::invalid_argument("d_weight: length mismatch");
  }
  long s_t = 0;
  long s_r = 0;
  for (std::size_t i = 0; i < w.r.size(); ++i) {
    if (w.r[i] <= 0 || (i > 0 && w.r[i] <= w.r[i - 1])) {
      throw std::invalid_argument("d_weight: parts must be positive and strictly increasing");
    }
    if (w.t1[i] < 0 || w.t1[i] > t_full[i]) throw std::invalid_argument("d_weight: split out of bounds");
    s_t += w.t1[i];
    s_r += static_cast<long>(w.t1[i]) * w.r[i];
  }
  if (s_r > w.ell) throw std::invalid_argument("d_weight: sum t1_i r_i exceeds ell");

  BigInt den = 1;
  for (int x : w.t1) den *= factorial(static_cast<unsigned>(x));
  den *= factorial(static_cast<unsigned>(w.ell - s_r));
  BigInt num = BigInt(w.ell) * factorial(static_cast<unsigned>(w.ell - 1 - s_r + s_t));
  if (s_t % 2 == 0) num = -num;
  Rational out(num, den);
  out.canonicalize();
  return out;
}

bool verify_d_recurrence(int ell, std::span<const int> r, std::span<const int> t) {
  if (r.size() != t.size() || r.empty()) throw std::invalid_argument("verify_d_recurrence: bad tuple");
  const std::size_t k = r.size();
  DWeight w{ell, std::vector<int>(r.begin(), r.end()), std::vector<int>(k, 0)};

  Rational rhs = 0;
  std::vector<std::int64_t> lower(k + 1);
  // Odometer over 0 <= t1_i <= t_i, skipping t1 == t.
  while (true) {
    bool is_full = true;
    long s_r = 0;
    for (std::size_t i = 0; i < k; ++i) {
      is_full = is_full && w.t1[i] == t[i];
      s_r += static_cast<long>(w.t1[i]) * r[i];
    }
    if (!is_full) {
      const std::int64_t top = ell - s_r;
      std::int64_t rest = top;
      for (std::size_t i = 0; i < k; ++i) {
        lower[i] = t[i] - w.t1[i];
        rest -= lower[i];
      }
      lower[k] = rest;
      rhs += d_weight(w, t) * Rational(full_multinomial(top, lower));
    }
    std::size_t i = 0;
    while (i < k && w.t1[i] == t[i]) w.t1[i++] = 0;
    if (i == k) break;
    ++w.t1[i];
  }
  w.t1.assign(t.begin(), t.end());
  return d_weight(w, t) == -rhs;
}

}  // namespace modpoly
