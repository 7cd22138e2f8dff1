#pragma once

#include "modpoly/bigint.hpp"
#include "modpoly/jfun.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace modpoly {

/// Coefficient of q^k in (sum_{i>=0} c_{i-1} q^i)^N, via a series power of
/// the order-k truncation. Needs c_0..c_{k-1}.
BigInt jhat_power_coeff(unsigned N, std::int64_t k, const JTable& j);

/// a_{ell,ell-m} for m = 0..m_max from the induction recurrence obtained by
/// matching the q^{-ell^2-ell+m} coefficients of Phi_ell(j(ell z), j(z)).
/// Row prefixes are computed once and reused. Needs c_0..c_{m_max-1}.
std::vector<BigInt> recurrence_row(int ell, int m_max, const JTable& j);

/// Single entry of recurrence_row.
BigInt coeff_recurrence(int ell, int m, const JTable& j);

/// Index data for the rational d-weight: the part sizes r (strictly
/// increasing, positive) and the split multiplicities t1.
struct DWeight {
  int ell;
  std::vector<int> r;
  std::vector<int> t1;
};

/// (-1)^{S_t - 1} / prod t1_i! * ell * (ell - 1 - S_r + S_t)! / (ell - S_r)!
/// where S_t = sum t1_i and S_r = sum t1_i r_i. Equals -1 when every t1_i = 0.
/// `t_full` bounds the split: 0 <= t1_i <= t_full_i. Throws
/// std::invalid_argument on length mismatch or bound violations.
Rational d_weight(const DWeight& w, std::span<const int> t_full);

/// Checks d(r; t) = -sum over proper splits t1 != t of
/// d(r; t1) * multinomial(ell - S_r(t1); t - t1, remainder), exactly.
bool verify_d_recurrence(int ell, std::span<const int> r, std::span<const int> t);

}  // namespace modpoly
