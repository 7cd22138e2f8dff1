#include "modpoly/solver.hpp"
#include "modpoly/closedform.hpp"
#include "modpoly/recurrence.hpp"
#include "phi5.hpp"

#include <gtest/gtest.h>

using namespace modpoly;

namespace {

ModularPolynomial solve(int ell) { return solve_full_polynomial(ell, j_coefficients(solver_min_j_count(ell) + 8)); }

}  // namespace

TEST(Solver, PhiTwoClassical) {
  const auto phi = solve(2);
  EXPECT_EQ(phi.at(2, 2), -1);
  EXPECT_EQ(phi.at(2, 1), 1488);
  EXPECT_EQ(phi.at(2, 0), -162000);
  EXPECT_EQ(phi.at(1, 1), 40773375);
  EXPECT_EQ(phi.at(1, 0), BigInt("8748000000"));
  EXPECT_EQ(phi.at(0, 0), BigInt("-157464000000000"));
  EXPECT_EQ(phi.at(0, 1), phi.at(1, 0));
}

TEST(Solver, PhiFiveMatchesFactoredTable) {
  const auto phi = solve(5);
  const auto expected = oracle::phi5_from_factors();
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= m; ++n) EXPECT_EQ(phi.at(m, n), expected.at(m, n)) << m << "," << n;
  EXPECT_EQ(phi, expected);
}

TEST(Solver, PhiSevenConstantAndLinearTermVanish) {
  const auto phi = solve(7);
  EXPECT_EQ(phi.at(0, 0), 0);
  EXPECT_EQ(phi.at(1, 0), 0);
  EXPECT_NE(phi.at(2, 0), 0);
}

TEST(Solver, ResidualVanishes) {
  for (int ell : {2, 3, 5, 7}) {
    const auto j = j_coefficients(solver_min_j_count(ell) + 30);
    const auto phi = solve_full_polynomial(ell, j);
    const auto residual = evaluate_on_j(phi, j);
    EXPECT_TRUE(residual.is_zero()) << ell;
    EXPECT_GT(residual.precision(), 0) << ell;
  }
}

TEST(Solver, TopRowMatchesRecurrence) {
  for (int ell : {3, 5, 7, 11}) {
    const auto j = j_coefficients(solver_min_j_count(ell));
    const auto row = solve_full_polynomial(ell, j).top_row();
    EXPECT_EQ(row, recurrence_row(ell, ell, j)) << ell;
  }
}

TEST(Solver, Errors) {
  EXPECT_THROW(solve_full_polynomial(5, j_coefficients(solver_min_j_count(5) - 1)), std::out_of_range);
  EXPECT_THROW(solve_full_polynomial(6, j_coefficients(60)), std::invalid_argument);

  auto good = j_coefficients(solver_min_j_count(3) + 4);
  std::vector<BigInt> values;
  for (std::int64_t i = -1; i < good.count(); ++i) values.push_back(good.c(i));
  values[4] += 1;  // c_3 corrupted
  EXPECT_THROW(solve_full_polynomial(3, JTable(values)), InconsistentSystem);
}
