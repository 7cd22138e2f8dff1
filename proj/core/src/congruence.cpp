#include "modpoly/congruence.hpp"

#include <stdexcept>

namespace modpoly {

Valuation ord_p(const BigInt& x, unsigned long p) {
  if (p < 2) throw std::invalid_argument("ord_p: p must be prime");
  if (sgn(x) == 0) return Valuation::infinite();
  BigInt rest;
  BigInt prime(p);
  const auto e = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t());
  return Valuation::finite(e);
}

unsigned required_two_valuation(int m) {
  if (m < 1) throw std::invalid_argument("required_two_valuation: m must be positive");
  switch (m % 8) {
    case 4: return 1;
    case 2:
    case 6: return 2;
    case 1: return 3;
    case 5: return 4;
    case 3:
    case 7: return 5;
    default: return 0;
  }
}

unsigned required_three_valuation(int m) {
  if (m < 1) throw std::invalid_argument("required_three_valuation: m must be positive");
  switch (m % 3) {
    case 1: return 1;
    case 2: return 2;
    default: return 0;
  }
}

bool five_predicted(int ell, int m) {
  if (m <= 0 || m >= ell) return false;
  const int le = ell % 5;
  const int me = m % 5;
  return ((le == 1 || le == 3) && me == 4) || (le == 2 && me == 3) || (le == 4 && me == 2);
}

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Prop22: return "prop22";
    case CheckKind::Prop23: return "prop23";
    case CheckKind::Conj25: return "conj25";
    case CheckKind::Conj12: return "conj12";
  }
  return "unknown";
}

std::optional<CheckKind> parse_check_kind(const std::string& name) {
  for (CheckKind k : all_checks()) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

Severity severity_of(CheckKind kind) {
  return (kind == CheckKind::Prop22 || kind == CheckKind::Prop23) ? Severity::Fatal : Severity::Counterexample;
}

void CongruenceReport::add(CheckRecord record) {
  auto& s = summary[record.kind];
  (record.passed ? s.passed : s.failed) += 1;
  checks.push_back(record);
}

void CongruenceReport::merge(const CongruenceReport& other) {
  for (const auto& r : other.checks) add(r);
  for (const auto& [k, v] : other.info) info[k] += v;
}

bool CongruenceReport::has_fatal_failure() const {
  for (const auto& r : checks) {
    if (!r.passed && r.severity == Severity::Fatal) return true;
  }
  return false;
}

bool CongruenceReport::has_counterexample() const {
  for (const auto& r : checks) {
    if (!r.passed && r.severity == Severity::Counterexample) return true;
  }
  return false;
}

std::size_t CongruenceReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : checks) n += r.passed ? 0 : 1;
  return n;
}

namespace {

CheckRecord make_record(CheckKind kind, int m, int n, unsigned long p, std::uint64_t required, const BigInt& value) {
  const Valuation v = ord_p(value, p);
  return CheckRecord{kind, m, n, p, required, v, v.at_least(required), severity_of(kind)};
}

}  // namespace

CongruenceReport check_row(int ell, std::span<const BigInt> row, const CheckSet& which) {
  if (static_cast<int>(row.size()) != ell) throw std::invalid_argument("check_row: row must hold m = 1..ell");
  CongruenceReport report;
  report.ell = ell;
  for (int m = 1; m <= ell; ++m) {
    const BigInt& a = row[static_cast<std::size_t>(m - 1)];
    const int n = ell - m;
    if (which.contains(CheckKind::Prop22) && ell % 2 == 1) {
      if (const unsigned req = required_two_valuation(m); req > 0) {
        report.add(make_record(CheckKind::Prop22, ell, n, 2, req, a));
      } else {
        report.info["m=0 mod 8 rows"] += 1;
        if (!ord_p(a, 2).at_least(1)) report.info["m=0 mod 8 rows with odd coefficient"] += 1;
      }
    }
    if (which.contains(CheckKind::Prop23)) {
      if (const unsigned req = required_three_valuation(m); req > 0) {
        report.add(make_record(CheckKind::Prop23, ell, n, 3, req, a));
      } else {
        report.info["m=0 mod 3 rows"] += 1;
        if (!ord_p(a, 3).at_least(1)) report.info["m=0 mod 3 rows not divisible by 3"] += 1;
      }
    }
    if (which.contains(CheckKind::Conj25) && five_predicted(ell, m)) {
      report.add(make_record(CheckKind::Conj25, ell, n, 5, 1, a));
    }
  }
  return report;
}

CongruenceReport check_conjecture_div(const ModularPolynomial& poly) {
  const int ell = poly.ell();
  CongruenceReport report;
  report.ell = ell;
  for (int m = ell; m >= 0; --m) {
    for (int n = m; n >= 0; --n) {
      const int c = ell + 1 - m - n;
      if (c <= 0) continue;
      const BigInt& a = poly.at(m, n);
      const auto uc = static_cast<std::uint64_t>(c);
      if (ell != 2) report.add(make_record(CheckKind::Conj12, m, n, 2, 15 * uc, a));
      if (ell != 3) {
        const std::uint64_t req = (ell % 3 == 1) ? (9 * uc + 1) / 2 : 3 * uc;
        report.add(make_record(CheckKind::Conj12, m, n, 3, req, a));
      }
      if (ell != 5) report.add(make_record(CheckKind::Conj12, m, n, 5, 3 * uc, a));
    }
  }
  return report;
}

}  // namespace modpoly
