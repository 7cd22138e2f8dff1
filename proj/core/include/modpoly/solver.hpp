#pragma once

#include "modpoly/jfun.hpp"
#include "modpoly/modular_polynomial.hpp"
#include "modpoly/qseries.hpp"

#include <cstdint>
#include <stdexcept>

namespace modpoly {

/// The linear system for Phi_ell has no (integral) solution, or the solved
/// polynomial fails the residual check.
class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Smallest JTable::count() accepted by solve_full_polynomial.
inline std::int64_t solver_min_j_count(int ell) { return std::int64_t{ell} * ell + ell + 2; }

/// Phi_ell(j(ell z), j(z)) as a q-series, with precision limited by j.
IntSeries evaluate_on_j(const ModularPolynomial& poly, const JTable& j);

/// Solves for every a_{m,n} of Phi_ell from the vanishing of the q^k
/// coefficients, -ell^2-ell <= k <= 0, of Phi_ell(j(ell z), j(z)), using exact
/// rational elimination. Every remaining coefficient below the working
/// precision (count - ell^2 - ell) is then checked to vanish as well.
///
/// Throws std::out_of_range if j.count() < solver_min_j_count(ell) and
/// InconsistentSystem if no integral solution exists.
ModularPolynomial solve_full_polynomial(int ell, const JTable& j);

}  // namespace modpoly
