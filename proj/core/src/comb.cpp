#include "modpoly/comb.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace modpoly {

int PartitionTerm::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < r.size(); ++i) w += r[i] * t[i];
  return w;
}

int PartitionTerm::u() const { return std::accumulate(t.begin(), t.end(), 0) - 1; }

PartitionGenerator::PartitionGenerator(int m) : m_(m) {
  if (m < 1) throw std::invalid_argument("partitions(m) needs m >= 1");
}

bool PartitionGenerator::next(PartitionTerm& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    blocks_.assign(1, {m_, 1});
  } else {
    int rem = 0;
    if (blocks_.back().first == 1) {
      rem = blocks_.back().second;
      blocks_.pop_back();
    }
    if (blocks_.empty()) {
      done_ = true;
      return false;
    }
    auto& [x, mult] = blocks_.back();
    const int part = x;
    rem += part;
    if (--mult == 0) blocks_.pop_back();
    const int y = part - 1;
    blocks_.emplace_back(y, rem / y);
    rem %= y;
    if (rem > 0) blocks_.emplace_back(rem, 1);
  }
  out.r.resize(blocks_.size());
  out.t.resize(blocks_.size());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const auto& [part, mult] = blocks_[blocks_.size() - 1 - i];
    out.r[i] = part;
    out.t[i] = mult;
  }
  return true;
}

std::optional<PartitionTerm> PartitionGenerator::next() {
  PartitionTerm term;
  if (!next(term)) return std::nullopt;
  return term;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: n = " + std::to_string(n) + " is negative");
  if (k < 0) throw std::invalid_argument("binomial: k is negative");
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational multinomial_top(int u, std::span<const int> t) {
  int sum = 0;
  for (int x : t) {
    if (x < 0) throw std::invalid_argument("multinomial_top: negative multiplicity");
    sum += x;
  }
  if (u != sum - 1 || u < 0) throw std::invalid_argument("multinomial_top: u must equal sum(t) - 1 >= 0");
  BigInt den = 1;
  for (int x : t) den *= factorial(static_cast<unsigned>(x));
  Rational out(factorial(static_cast<unsigned>(u)), den);
  out.canonicalize();
  return out;
}

BigInt full_multinomial(std::int64_t n, std::span<const std::int64_t> parts) {
  std::int64_t sum = 0;
  for (auto p : parts) {
    if (p < 0) throw std::invalid_argument("full_multinomial: negative part");
    sum += p;
  }
  if (sum != n) throw std::invalid_argument("full_multinomial: parts sum to " + std::to_string(sum) +
                                            ", expected " + std::to_string(n));
  // Product of binomials avoids the large n! intermediate.
  BigInt out = 1;
  std::int64_t used = 0;
  for (auto p : parts) {
    used += p;
    out *= binomial(used, p);
  }
  return out;
}

BigInt stirling_first(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling_first: negative argument");
  if (k > n) throw std::invalid_argument("stirling_first: k > n");
  // s(i+1, j) = s(i, j-1) - i s(i, j)
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j >= 1; --j) row[j] = row[j - 1] - BigInt(i) * row[j];
    row[0] = BigInt(-i) * row[0];
  }
  return row[static_cast<std::size_t>(k)];
}

BigInt stirling_second(int d, int n) {
  if (d < 0 || n < 0) throw std::invalid_argument("stirling_second: negative argument");
  if (d < n) return 0;
  // S(i+1, j) = j S(i, j) + S(i, j-1)
  std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int i = 0; i < d; ++i) {
    for (int j = n; j >= 1; --j) row[j] = BigInt(j) * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(n)];
}

}  // namespace modpoly
