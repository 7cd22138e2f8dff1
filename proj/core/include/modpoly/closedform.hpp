#pragma once

#include "modpoly/bigint.hpp"
#include "modpoly/comb.hpp"
#include "modpoly/jfun.hpp"

#include <stdexcept>
#include <vector>

namespace modpoly {

/// Raised when a partition-term weight u!/prod(t_i!) * ell * C(ell-m+u, u)
/// fails to be an integer. That weight is a theorem-backed integer, so this
/// always means a bug (or a counterexample).
class IntegralityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A coefficient a_{ell, ell-m} of the top row of Phi_ell: an odd prime
/// ell >= 3 and 0 <= m <= ell. Validated on construction.
class CoeffRequest {
 public:
  CoeffRequest(int ell, int m);
  int ell() const { return ell_; }
  int m() const { return m_; }

 private:
  int ell_;
  int m_;
};

/// (-1)^u * u!/prod t_i! * ell * C(ell - m + u, u) for a partition of m.
/// Throws IntegralityError if the exact value is not an integer.
BigInt term_weight(int ell, int m, const PartitionTerm& term);

/// a_{ell,ell-m} from the partition-sum closed form (-1 for m = 0; the m = ell
/// case carries the extra -(ell+1) c_0 term). Needs c_0..c_{m-1}.
BigInt coeff_closed(const CoeffRequest& req, const JTable& j);

/// Hard-coded polynomial expressions in c_0..c_6 for 1 <= m <= 7 < ell.
BigInt coeff_small_m(const CoeffRequest& req, const JTable& j);

/// a_{ell,ell-m} for m = 0..m_max via coeff_closed, evaluating distinct m on
/// up to `threads` worker threads. Result index is m.
std::vector<BigInt> closed_row(int ell, int m_max, const JTable& j, unsigned threads = 1);

}  // namespace modpoly
