#include "modpoly/bigint.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace modpoly {

BigInt parse_decimal(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("not an integer: '" + text + "'");
  }
  BigInt out;
  // mpz_set_str rejects a leading '+'.
  out.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return out;
}

const BigInt& factorial(unsigned n) {
  static std::mutex mutex;
  // Deque-like growth: references stay valid because we never shrink and
  // reserve generously up front.
  static std::vector<BigInt> table = [] {
    std::vector<BigInt> t;
    t.reserve(4096);
    t.emplace_back(1);
    return t;
  }();
  std::lock_guard lock(mutex);
  if (n >= table.capacity()) throw std::out_of_range("factorial argument too large");
  while (table.size() <= n) {
    BigInt next = table.back() * static_cast<unsigned long>(table.size());
    table.push_back(std::move(next));
  }
  return table[n];
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace modpoly
