#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace modpoly {

/// Unbounded signed integer. Every coefficient in the library is one of these.
using BigInt = mpz_class;

/// Exact rational, always kept in canonical (reduced, positive denominator) form.
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

/// Parses an optionally signed decimal integer. Throws std::invalid_argument
/// on anything else (including empty input and embedded whitespace).
BigInt parse_decimal(const std::string& text);

inline BigInt ipow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

/// n! for small n (cached).
const BigInt& factorial(unsigned n);

/// Deterministic primality test for the small moduli used here (trial division).
bool is_prime(std::int64_t n);

}  // namespace modpoly
