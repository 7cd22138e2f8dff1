#pragma once

#include "modpoly/congruence.hpp"
#include "modpoly/modular_polynomial.hpp"

#include <string>

namespace modpoly {

/// {"ell", "monic_degree", "coefficients": [{"m","n","value"}...]} with every
/// a_{m,n}, m >= n, sorted by m then n descending; values as decimal strings.
std::string emit_polynomial_json(const ModularPolynomial& poly);

/// Reader for emit_polynomial_json output. Throws FormatError.
ModularPolynomial parse_polynomial_json(const std::string& text);

std::string emit_report_json(const CongruenceReport& report);

/// One line per record, plus the summary.
std::string format_report_text(const CongruenceReport& report);

}  // namespace modpoly
