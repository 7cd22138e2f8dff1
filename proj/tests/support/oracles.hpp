#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's series or combinatorics code.

#include "modpoly/bigint.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace modpoly::oracle {

/// Dense truncated polynomial product, coefficients 0..n-1.
inline std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::size_t n) {
  std::vector<BigInt> out(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

/// prod_{k=1}^{n-1} (1 - q^k)^24 expanded factor by factor, mod q^n.
inline std::vector<BigInt> eta24_direct(std::size_t n) {
  std::vector<BigInt> acc(n);
  acc[0] = 1;
  for (std::size_t k = 1; k < n; ++k) {
    for (int rep = 0; rep < 24; ++rep) {
      for (std::size_t i = n - 1; i >= k; --i) acc[i] -= acc[i - k];
    }
  }
  return acc;
}

/// Number of partitions of n with all parts <= max_part, by plain recursion.
inline std::uint64_t partition_count(int n, int max_part) {
  if (n == 0) return 1;
  if (n < 0 || max_part == 0) return 0;
  return partition_count(n - max_part, max_part) + partition_count(n, max_part - 1);
}

inline BigInt pascal(int n, int k) {
  std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    rows[i].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) rows[i][j] = rows[i - 1][j - 1] + rows[i - 1][j];
  }
  return (k >= 0 && k <= n) ? rows[n][k] : BigInt(0);
}

inline BigInt fact(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

/// Coefficients of prod_{i=0}^{n-1} (x - i), index = power of x.
inline std::vector<BigInt> falling_factorial_poly(int n) {
  std::vector<BigInt> p{1};
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> next(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= BigInt(i) * p[k];
    }
    p = std::move(next);
  }
  return p;
}

/// Visits every (t_1..t_k) with t_i >= 0 and sum i*t_i == k.
inline void for_each_weighted_composition(int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> t(static_cast<std::size_t>(k) + 1, 0);
  std::function<void(int, int)> rec = [&](int part, int remaining) {
    if (part == 0) {
      if (remaining == 0) visit(t);
      return;
    }
    for (int c = 0; c * part <= remaining; ++c) {
      t[static_cast<std::size_t>(part)] = c;
      rec(part - 1, remaining - c * part);
    }
    t[static_cast<std::size_t>(part)] = 0;
  };
  rec(k, k);
}

/// Coefficient of q^k in (sum_i c_{i-1} q^i)^N by explicit multinomial
/// enumeration; `c(i)` returns c_i.
inline BigInt multinomial_power_coeff(int N, int k, const std::function<BigInt(int)>& c) {
  BigInt total = 0;
  for_each_weighted_composition(k, [&](const std::vector<int>& t) {
    int used = 0;
    for (int i = 1; i <= k; ++i) used += t[static_cast<std::size_t>(i)];
    if (used > N) return;
    BigInt term = fact(N) / fact(N - used);
    for (int i = 1; i <= k; ++i) {
      term /= fact(t[static_cast<std::size_t>(i)]);
      for (int e = 0; e < t[static_cast<std::size_t>(i)]; ++e) term *= c(i - 1);
    }
    total += term;
  });
  return total;
}

/// Reproducible small random integers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  /// Random integer with up to `digits` decimal digits, either sign.
  BigInt big(int digits) {
    BigInt out = 0;
    const int d = static_cast<int>(uniform(1, digits));
    for (int i = 0; i < d; ++i) out = out * 10 + uniform(0, 9);
    return uniform(0, 1) ? out : BigInt(-out);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace modpoly::oracle
