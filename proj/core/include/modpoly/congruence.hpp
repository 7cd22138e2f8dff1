#pragma once

#include "modpoly/bigint.hpp"
#include "modpoly/modular_polynomial.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace modpoly {

/// ord_p of an integer: a natural number, or infinite for zero.
class Valuation {
 public:
  static Valuation finite(std::uint64_t v) { return Valuation(v); }
  static Valuation infinite() { return Valuation(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Only meaningful when finite.
  std::uint64_t value() const { return value_.value_or(0); }

  /// True when this valuation is at least `required` (infinite always is).
  bool at_least(std::uint64_t required) const { return is_infinite() || *value_ >= required; }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
    return *a.value_ <=> *b.value_;
  }

 private:
  Valuation() = default;
  explicit Valuation(std::uint64_t v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

Valuation ord_p(const BigInt& x, unsigned long p);

/// Power of 2 guaranteed to divide a_{ell,ell-m} (odd ell); 0 means no claim.
unsigned required_two_valuation(int m);

/// Power of 3 guaranteed to divide a_{ell,ell-m}; 0 means no claim.
unsigned required_three_valuation(int m);

/// Whether 5 | a_{ell,ell-m} is predicted for 0 < m < ell.
bool five_predicted(int ell, int m);

enum class CheckKind { Prop22, Prop23, Conj25, Conj12 };
enum class Severity { Fatal, Counterexample };

std::string to_string(CheckKind kind);
std::optional<CheckKind> parse_check_kind(const std::string& name);
Severity severity_of(CheckKind kind);

using CheckSet = std::set<CheckKind>;
inline CheckSet all_checks() { return {CheckKind::Prop22, CheckKind::Prop23, CheckKind::Conj25, CheckKind::Conj12}; }

struct CheckRecord {
  CheckKind kind;
  int m;  // coefficient a_{m,n}
  int n;
  unsigned long prime;
  std::uint64_t required;
  Valuation observed;
  bool passed;
  Severity severity;
};

struct CheckSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct CongruenceReport {
  int ell = 0;
  std::vector<CheckRecord> checks;
  std::map<CheckKind, CheckSummary> summary;
  /// Informational counts, e.g. how many a_{ell,ell-m} with m = 0 mod 8 are odd.
  std::map<std::string, std::size_t> info;

  void add(CheckRecord record);
  /// Appends another report for the same ell.
  void merge(const CongruenceReport& other);

  bool has_fatal_failure() const;
  bool has_counterexample() const;
  std::size_t failures() const;
};

/// Checks a_{ell,ell-m} (row[m-1], m = 1..ell) against the 2- and 3-adic
/// tables and the mod-5 prediction. Only checks in `which` are run.
CongruenceReport check_row(int ell, std::span<const BigInt> row, const CheckSet& which = all_checks());

/// For every a_{m,n} with c = ell + 1 - m - n > 0: ord_2 >= 15c (ell != 2),
/// ord_3 >= 3c (ell != 3; ceil(9c/2) when ell = 1 mod 3), ord_5 >= 3c (ell != 5).
CongruenceReport check_conjecture_div(const ModularPolynomial& poly);

}  // namespace modpoly
