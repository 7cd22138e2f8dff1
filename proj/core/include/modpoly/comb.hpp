#pragma once

#include "modpoly/bigint.hpp"

#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace modpoly {

/// One solution of t_1 r_1 + ... + t_k r_k = m with 0 < r_1 < ... < r_k and
/// every t_i >= 1: the distinct part sizes and their multiplicities.
struct PartitionTerm {
  std::vector<int> r;
  std::vector<int> t;

  /// sum t_i r_i
  int weight() const;
  /// sum t_i - 1
  int u() const;

  friend bool operator==(const PartitionTerm&, const PartitionTerm&) = default;
};

/// Incremental generator over the partitions of m.
///
/// Order: parts written in non-increasing order, listed in decreasing
/// lexicographic order (m, (m-1)+1, ..., 1+1+...+1). For m = 4 that is
///   4, 3+1, 2+2, 2+1+1, 1+1+1+1.
/// Nothing is materialised beyond the current term.
class PartitionGenerator {
 public:
  explicit PartitionGenerator(int m);

  /// The next term, or nullopt once exhausted.
  std::optional<PartitionTerm> next();

  /// Like next() but writes into `out` to avoid reallocations in hot loops.
  bool next(PartitionTerm& out);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PartitionTerm;
    using difference_type = std::ptrdiff_t;
    using pointer = const PartitionTerm*;
    using reference = const PartitionTerm&;

    iterator() = default;
    explicit iterator(PartitionGenerator* gen) : gen_(gen) { ++*this; }
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++() {
      if (gen_ && !gen_->next(current_)) gen_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.gen_ == b.gen_; }

   private:
    PartitionGenerator* gen_ = nullptr;
    PartitionTerm current_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

 private:
  int m_;
  bool started_ = false;
  bool done_ = false;
  // (part, multiplicity), parts strictly decreasing.
  std::vector<std::pair<int, int>> blocks_;
};

/// Partitions of m (m >= 1) in generator order.
inline PartitionGenerator partitions(int m) { return PartitionGenerator(m); }

/// C(n, k); zero when 0 <= n < k. Throws std::invalid_argument for n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// u! / prod t_i! as an exact rational; requires u == sum t_i - 1 and t_i >= 0.
Rational multinomial_top(int u, std::span<const int> t);

/// n! / prod parts_i!; requires sum parts == n and parts_i >= 0.
BigInt full_multinomial(std::int64_t n, std::span<const std::int64_t> parts);

/// Signed Stirling number of the first kind s(n, k), 0 <= k <= n.
BigInt stirling_first(int n, int k);

/// Stirling number of the second kind S(d, n); zero when d < n.
BigInt stirling_second(int d, int n);

}  // namespace modpoly
