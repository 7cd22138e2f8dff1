#include "modpoly/closedform.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

namespace modpoly {

CoeffRequest::CoeffRequest(int ell, int m) : ell_(ell), m_(m) {
  if (ell < 3 || !is_prime(ell)) {
    throw std::invalid_argument("closed formulas need a prime ell >= 3, got " + std::to_string(ell));
  }
  if (m < 0 || m > ell) {
    throw std::invalid_argument("m must satisfy 0 <= m <= ell, got m = " + std::to_string(m));
  }
}

BigInt term_weight(int ell, int m, const PartitionTerm& term) {
  if (term.weight() != m) throw std::invalid_argument("term_weight: partition weight does not match m");
  if (m > ell) throw std::invalid_argument("term_weight: m exceeds ell");
  const int u = term.u();
  Rational w = multinomial_top(u, term.t);
  w *= Rational(BigInt(ell) * binomial(ell - m + u, u));
  if (w.get_den() != 1) {
    throw IntegralityError("integrality violation: weight " + w.get_str() + " for ell=" + std::to_string(ell) +
                           ", m=" + std::to_string(m));
  }
  return (u % 2 == 0) ? BigInt(w.get_num()) : BigInt(-w.get_num());
}

namespace {

// c_{r-1}^t, filled on demand.
class PowerCache {
 public:
  PowerCache(const JTable& j, int max_part) : j_(j), table_(static_cast<std::size_t>(max_part) + 1) {}

  const BigInt& get(int r, int t) {
    auto& powers = table_[static_cast<std::size_t>(r)];
    if (powers.empty()) powers.push_back(1);
    while (static_cast<int>(powers.size()) <= t) powers.push_back(powers.back() * j_.c(r - 1));
    return powers[static_cast<std::size_t>(t)];
  }

 private:
  const JTable& j_;
  std::vector<std::vector<BigInt>> table_;
};

}  // namespace

BigInt coeff_closed(const CoeffRequest& req, const JTable& j) {
  const int ell = req.ell();
  const int m = req.m();
  if (m == 0) return -1;
  j.require(m, "coeff_closed");

  PowerCache powers(j, m);
  BigInt sum = 0;
  BigInt monomial;
  PartitionTerm term;
  PartitionGenerator gen(m);
  while (gen.next(term)) {
    monomial = term_weight(ell, m, term);
    for (std::size_t i = 0; i < term.r.size(); ++i) monomial *= powers.get(term.r[i], term.t[i]);
    sum += monomial;
  }
  if (m == ell) sum -= BigInt(ell + 1) * j.c(0);
  return sum;
}

BigInt coeff_small_m(const CoeffRequest& req, const JTable& j) {
  const int ell = req.ell();
  const int m = req.m();
  if (m < 1 || m > 7 || m >= ell) {
    throw std::invalid_argument("coeff_small_m covers 1 <= m <= 7 < ell only");
  }
  j.require(m, "coeff_small_m");

  std::vector<Rational> c(7);
  for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(i)] = Rational(j.c(i));
  const Rational l(ell);
  auto C = [](int n, int k) { return Rational(binomial(n, k)); };
  auto half = Rational(1, 2);
  auto third = Rational(1, 3);
  auto three_halves = Rational(3, 2);
  auto p = [](const Rational& x, int e) {
    Rational out(1);
    for (int i = 0; i < e; ++i) out *= x;
    return out;
  };
  const Rational& c0 = c[0];
  const Rational& c1 = c[1];
  const Rational& c2 = c[2];
  const Rational& c3 = c[3];
  const Rational& c4 = c[4];
  const Rational& c5 = c[5];
  const Rational& c6 = c[6];

  Rational v;
  switch (m) {
    case 1:
      v = l * c0;
      break;
    case 2:
      v = l * c1 - C(ell, 2) * p(c0, 2);
      break;
    case 3:
      v = l * c2 - l * (l - 2) * c0 * c1 + C(ell, 3) * p(c0, 3);
      break;
    case 4:
      v = l * c3 - l * (l - 3) * (p(c1, 2) * half + c0 * c2) + l * C(ell - 2, 2) * p(c0, 2) * c1 - C(ell, 4) * p(c0, 4);
      break;
    case 5:
      v = l * c4 - l * (l - 4) * (c0 * c3 + c1 * c2) + l * C(ell - 3, 2) * (p(c0, 2) * c2 + c0 * p(c1, 2)) -
          l * C(ell - 2, 3) * p(c0, 3) * c1 + C(ell, 5) * p(c0, 5);
      break;
    case 6:
      v = l * c5 - l * (l - 5) * (c4 * c0 + c3 * c1 + half * p(c2, 2)) +
          l * C(ell - 4, 2) * (c3 * p(c0, 2) + 2 * c2 * c1 * c0 + third * p(c1, 3)) -
          l * C(ell - 3, 3) * (c2 * p(c0, 3) + three_halves * p(c1, 2) * p(c0, 2)) + l * C(ell - 2, 4) * c1 * p(c0, 4) -
          C(ell, 6) * p(c0, 6);
      break;
    case 7:
      v = l * c6 - l * (l - 6) * (c2 * c3 + c0 * c5 + c1 * c4) +
          l * C(ell - 5, 2) * (p(c0, 2) * c4 + 2 * c0 * c1 * c3 + p(c1, 2) * c2 + c0 * p(c2, 2)) -
          l * C(ell - 4, 3) * (3 * p(c0, 2) * c1 * c2 + p(c0, 3) * c3 + c0 * p(c1, 3)) +
          l * C(ell - 3, 4) * (p(c0, 4) * c2 + 2 * p(c0, 3) * p(c1, 2)) - l * C(ell - 2, 5) * p(c0, 5) * c1 +
          C(ell, 7) * p(c0, 7);
      break;
  }
  if (v.get_den() != 1) throw IntegralityError("coeff_small_m produced a non-integer");
  return v.get_num();
}

std::vector<BigInt> closed_row(int ell, int m_max, const JTable& j, unsigned threads) {
  if (m_max < 0 || m_max > ell) throw std::invalid_argument("closed_row: m_max out of range");
  CoeffRequest(ell, m_max);  // validates ell
  j.require(m_max, "closed_row");
  std::vector<BigInt> row(static_cast<std::size_t>(m_max) + 1);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(m_max) + 1));
  if (threads == 1) {
    for (int m = 0; m <= m_max; ++m) row[static_cast<std::size_t>(m)] = coeff_closed(CoeffRequest(ell, m), j);
    return row;
  }
  // Largest m first: the cost grows like p(m).
  std::atomic<int> next{m_max};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (int m = next.fetch_sub(1); m >= 0 && !failed; m = next.fetch_sub(1)) {
          try {
            row[static_cast<std::size_t>(m)] = coeff_closed(CoeffRequest(ell, m), j);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return row;
}

}  // namespace modpoly
