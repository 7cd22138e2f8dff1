#pragma once

#include "modpoly/bigint.hpp"
#include "modpoly/modular_polynomial.hpp"

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace modpoly {

/// Malformed input in a coefficient file or JSON document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public FormatError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : FormatError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateEntryError : public FormatError {
 public:
  using FormatError::FormatError;
};

class SymmetryConflictError : public FormatError {
 public:
  using FormatError::FormatError;
};

struct SutherlandEntry {
  int m;  // m >= n after normalisation
  int n;
  BigInt value;
};

/// Plain-text table of Phi_ell coefficients, one "[m,n] value" per line.
struct SutherlandFile {
  int ell = 0;
  std::vector<SutherlandEntry> entries;
};

/// Parses the "[m,n] value" format. Blank lines and '#' comments are
/// skipped, CRLF is accepted, the monic entry [ell+1,0] 1 is optional, and a
/// line [n,m] with m > n is folded onto [m,n]. A "# ell = N" comment or
/// `ell_hint` fixes ell; otherwise it is inferred from the largest index.
SutherlandFile parse_sutherland(std::istream& in, std::optional<int> ell_hint = std::nullopt);
SutherlandFile parse_sutherland(std::string_view text, std::optional<int> ell_hint = std::nullopt);

/// Trailing integer in a file name such as "phi_j_11.txt", if any.
std::optional<int> ell_from_filename(std::string_view path);

/// Missing coefficients are zero. Throws FormatError for indices beyond ell
/// or a wrong monic entry.
ModularPolynomial to_polynomial(const SutherlandFile& file);

/// Inverse of parse_sutherland: nonzero a_{m,n} with m >= n, monic entry
/// first, descending (m, n).
std::string write_sutherland(const ModularPolynomial& poly);

}  // namespace modpoly
