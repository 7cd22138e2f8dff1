// Acceptance gate: one PASS/FAIL line per criterion. All comparisons are
// exact; the only tolerance is the wall-clock limit printed on each line.

#include "cli.hpp"
#include "modpoly/closedform.hpp"
#include "modpoly/comb.hpp"
#include "modpoly/congruence.hpp"
#include "modpoly/jfun.hpp"
#include "modpoly/recurrence.hpp"
#include "modpoly/solver.hpp"
#include "modpoly/sutherland.hpp"
#include "oracles.hpp"
#include "phi5.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

using namespace modpoly;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::vector<int> primes_between(int lo, int hi) {
  std::vector<int> out;
  for (int p = lo; p <= hi; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

const JTable& big_table() {
  static const JTable j = j_coefficients(solver_min_j_count(11) + 8);
  return j;
}

// criterion 1
Outcome j_constants() {
  Outcome o;
  const auto j = j_coefficients(7);
  const char* expected[] = {"744", "196884", "21493760", "864299970", "20245856256", "333202640600", "4252023300096"};
  if (j.c(-1) != 1) o.fail("c_{-1} != 1");
  for (int i = 0; i < 7; ++i)
    if (to_decimal(j.c(i)) != expected[i]) o.fail("c_" + std::to_string(i) + " = " + to_decimal(j.c(i)));
  if (o.ok) o.detail = "c_0..c_6 exact";
  return o;
}

// criterion 2
Outcome phi5_closed_row() {
  Outcome o;
  const auto j = j_coefficients(5);
  const BigInt expected[] = {BigInt(3720), BigInt(-4550940), BigInt(2028551200),
                             BigInt(-2) * 3 * 25 * BigInt(1644556073), ipow(2, 17) * 81 * 5 * 31 * 1193};
  for (int m = 1; m <= 5; ++m) {
    const BigInt got = coeff_closed(CoeffRequest(5, m), j);
    if (got != expected[m - 1]) o.fail("m=" + std::to_string(m) + " gave " + to_decimal(got));
  }
  if (o.ok) o.detail = "a_{5-m,5} for m=1..5 exact";
  return o;
}

// criterion 3
Outcome oracle_equivalence() {
  Outcome o;
  const auto& j = big_table();
  std::size_t compared = 0;
  for (int ell : primes_between(3, 31)) {
    const auto closed = closed_row(ell, ell, j, worker_count());
    const auto recur = recurrence_row(ell, ell, j);
    for (int m = 0; m <= ell; ++m, ++compared)
      if (closed[m] != recur[m]) o.fail("ell=" + std::to_string(ell) + " m=" + std::to_string(m));
  }
  for (int ell : {37, 61, 97}) {
    const int m_max = std::min(ell, 60);
    const auto closed = closed_row(ell, m_max, j, worker_count());
    const auto recur = recurrence_row(ell, m_max, j);
    for (int m = 0; m <= m_max; ++m, ++compared)
      if (closed[m] != recur[m]) o.fail("ell=" + std::to_string(ell) + " m=" + std::to_string(m));
  }
  if (o.ok) o.detail = std::to_string(compared) + " coefficients agree";
  return o;
}

// criterion 4
Outcome full_solver() {
  Outcome o;
  const auto phi5 = solve_full_polynomial(5, big_table());
  const auto table = oracle::phi5_from_factors();
  int matched = 0;
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= m; ++n) {
      if (phi5.at(m, n) == table.at(m, n)) ++matched;
      else o.fail("Phi_5 a_{" + std::to_string(m) + "," + std::to_string(n) + "} differs");
    }
  const auto phi7 = solve_full_polynomial(7, big_table());
  if (phi7.at(0, 0) != 0 || phi7.at(1, 0) != 0) o.fail("Phi_7 a_{0,0} or a_{1,0} nonzero");
  for (int ell : {2, 3, 5, 7}) {
    const auto phi = solve_full_polynomial(ell, big_table());
    const auto residual = evaluate_on_j(phi, big_table());
    if (!residual.is_zero() || residual.precision() <= 0)
      o.fail("residual nonzero for ell=" + std::to_string(ell));
  }
  if (o.ok) o.detail = std::to_string(matched) + "/21 Phi_5 entries, Phi_7 a00 = a10 = 0, residuals zero for 2,3,5,7";
  return o;
}

std::vector<BigInt> computed_row(int ell) {
  auto row = recurrence_row(ell, ell, big_table());
  row.erase(row.begin());
  return row;
}

// criterion 5
Outcome theorem_congruences() {
  Outcome o;
  std::size_t checked = 0;
  for (int ell : primes_between(3, 97)) {
    const auto row = computed_row(ell);
    const auto report = check_row(ell, row, {CheckKind::Prop22, CheckKind::Prop23});
    checked += report.checks.size();
    for (const auto& rec : report.checks)
      if (!rec.passed)
        o.fail("ell=" + std::to_string(ell) + " m=" + std::to_string(ell - rec.n) + " p=" + std::to_string(rec.prime));
  }
  if (o.ok) o.detail = std::to_string(checked) + " 2-adic/3-adic claims, zero failures";
  return o;
}

// criterion 6
Outcome conjecture_checks() {
  Outcome o;
  for (int ell : {5, 7, 11}) {
    const auto report = check_conjecture_div(solve_full_polynomial(ell, big_table()));
    if (report.failures() != 0) o.fail("conjectured bound fails on Phi_" + std::to_string(ell));
  }
  std::size_t small = 0, large = 0, beyond = 0;
  for (int ell : primes_between(3, 97)) {
    const auto report = check_row(ell, computed_row(ell), {CheckKind::Conj25});
    for (const auto& rec : report.checks) {
      const int m = ell - rec.n;
      if (m <= 7) {
        ++small;
        if (!rec.passed) o.fail("5 does not divide a_{" + std::to_string(ell) + "," + std::to_string(rec.n) + "}");
      } else {
        ++large;
        if (!rec.passed) ++beyond;
      }
    }
  }
  if (o.ok) {
    o.detail = "Phi_5/7/11 pass; " + std::to_string(small) + " mod-5 predictions with m<=7 hold; " +
               std::to_string(beyond) + " of " + std::to_string(large) + " with m>7 are counterexamples (logged only)";
  }
  return o;
}

// criterion 7
Outcome integrality() {
  Outcome o;
  std::size_t terms = 0;
  for (int ell : {31, 37, 97}) {
    for (int m = 1; m <= 30 && m <= ell; ++m) {
      for (const auto& t : partitions(m)) {
        ++terms;
        try {
          (void)term_weight(ell, m, t);
        } catch (const IntegralityError& e) {
          o.fail(e.what());
        }
      }
    }
  }
  if (o.ok) o.detail = std::to_string(terms) + " partition terms integral";
  return o;
}

// criterion 8
Outcome proof_identities() {
  Outcome o;
  for (int n = 1; n <= 12; ++n) {
    const auto poly = oracle::falling_factorial_poly(n);
    for (int i = 0; i <= n; ++i)
      if (stirling_first(n, i) != poly[i]) o.fail("s(" + std::to_string(n) + "," + std::to_string(i) + ")");
  }
  for (int d = 0; d <= 12; ++d) {
    for (int n = 0; n <= 12; ++n) {
      BigInt lhs = 0;
      for (int i = 0; i <= n; ++i) lhs += ((i % 2 == 0) ? 1 : -1) * oracle::pascal(n, i) * ipow(BigInt(n - i), d);
      if (lhs != oracle::fact(n) * stirling_second(d, n)) o.fail("S(" + std::to_string(d) + "," + std::to_string(n) + ")");
    }
  }
  std::size_t tuples = 0;
  for (int ell : {13, 17}) {
    for (int w = 1; w <= 12; ++w) {
      for (const auto& t : partitions(w)) {
        ++tuples;
        if (!verify_d_recurrence(ell, t.r, t.t)) o.fail("d-recurrence ell=" + std::to_string(ell) + " w=" + std::to_string(w));
      }
    }
  }
  if (o.ok) o.detail = "Stirling identities n,d<=12; " + std::to_string(tuples) + " d-recurrence tuples";
  return o;
}

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::cli_main(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

// criterion 9 (b): ingestion of coefficient files through the CLI
Outcome ingestion(bool desk_scale_ok) {
  Outcome o;
  if (!desk_scale_ok) o.fail("criteria 4-6 did not all pass");

  const fs::path dir = fs::path(MODPOLY_TEST_TMP_DIR) / "acceptance_files";
  fs::create_directories(dir);
  std::vector<fs::path> files{fs::path(MODPOLY_TEST_DATA_DIR) / "phi_2.txt", fs::path(MODPOLY_TEST_DATA_DIR) / "phi_3.txt"};
  for (int ell : {5, 7, 11}) {
    const fs::path p = dir / ("phi_j_" + std::to_string(ell) + ".txt");
    std::ofstream(p) << write_sutherland(solve_full_polynomial(ell, big_table()));
    files.push_back(p);
  }
  if (const char* extra = std::getenv("MODPOLY_SUTHERLAND_DIR")) {
    for (const auto& entry : fs::directory_iterator(extra))
      if (entry.is_regular_file() && ell_from_filename(entry.path().string())) files.push_back(entry.path());
  }

  for (const auto& path : files) {
    std::ifstream in(path);
    const auto ell = parse_sutherland(in).ell;
    if (ell > 400 || !is_prime(ell)) continue;
    std::string report;
    const int code = run_cli({"check", "--ell", std::to_string(ell), "--set", "conj12", "--file", path.string()}, &report);
    if (code != 0 || report.find("\"counterexample\": false") == std::string::npos)
      o.fail(path.filename().string() + " exit " + std::to_string(code));
  }
  if (o.ok) o.detail = std::to_string(files.size()) + " coefficient files checked, all pass";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> body;
};

}  // namespace

int main() {
  bool desk_ok = true;
  int failures = 0;
  std::vector<Criterion> criteria{
      {1, "j-coefficients", 1, j_constants},
      {2, "Phi_5 row from the closed form", 1, phi5_closed_row},
      {3, "closed form = recurrence", 300, oracle_equivalence},
      {4, "full solver", 600, full_solver},
      {5, "2-adic and 3-adic theorems", 600, theorem_congruences},
      {6, "conjectured divisibility", 600, conjecture_checks},
      {7, "integrality of term weights", 60, integrality},
      {8, "proof identities", 60, proof_identities},
      {9, "coefficient-file ingestion", 600, [&] { return ingestion(desk_ok); }},
  };

  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) o.fail("exceeded time limit");
    if (!o.ok) ++failures;
    if (!o.ok && c.id >= 4 && c.id <= 6) desk_ok = false;
    std::printf("criterion %d %s: %s  (%s; %.2f s, limit %.0f s, exact match)\n", c.id, o.ok ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs, c.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
