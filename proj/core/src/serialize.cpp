#include "modpoly/serialize.hpp"

#include "modpoly/sutherland.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace modpoly {

using json = nlohmann::ordered_json;

std::string emit_polynomial_json(const ModularPolynomial& poly) {
  json coeffs = json::array();
  for (int m = poly.ell(); m >= 0; --m) {
    for (int n = m; n >= 0; --n) {
      coeffs.push_back(json{{"m", m}, {"n", n}, {"value", to_decimal(poly.at(m, n))}});
    }
  }
  json doc{{"ell", poly.ell()}, {"monic_degree", poly.monic_degree()}, {"coefficients", std::move(coeffs)}};
  return doc.dump(2) + "\n";
}

ModularPolynomial parse_polynomial_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("polynomial JSON: ") + e.what());
  }
  try {
    const int ell = doc.at("ell").get<int>();
    if (ell < 1) throw FormatError("polynomial JSON: ell must be positive");
    if (doc.contains("monic_degree") && doc["monic_degree"].get<int>() != ell + 1) {
      throw FormatError("polynomial JSON: monic_degree must be ell + 1");
    }
    ModularPolynomial poly(ell);
    std::set<std::pair<int, int>> seen;
    for (const auto& entry : doc.at("coefficients")) {
      int m = entry.at("m").get<int>();
      int n = entry.at("n").get<int>();
      if (m < n) std::swap(m, n);
      if (n < 0 || m > ell) throw FormatError("polynomial JSON: index out of range");
      if (!seen.insert({m, n}).second) throw DuplicateEntryError("polynomial JSON: duplicate coefficient");
      poly.set(m, n, parse_decimal(entry.at("value").get<std::string>()));
    }
    return poly;
  } catch (const json::exception& e) {
    throw FormatError(std::string("polynomial JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("polynomial JSON: ") + e.what());
  }
}

namespace {

const char* severity_name(Severity s) { return s == Severity::Fatal ? "fatal" : "counterexample"; }

}  // namespace

std::string emit_report_json(const CongruenceReport& report) {
  json checks = json::array();
  for (const auto& r : report.checks) {
    checks.push_back(json{{"check", to_string(r.kind)},
                          {"m", r.m},
                          {"n", r.n},
                          {"prime", r.prime},
                          {"required", r.required},
                          {"observed", r.observed.to_string()},
                          {"verdict", r.passed ? "pass" : "fail"},
                          {"severity", severity_name(r.severity)}});
  }
  json summary = json::object();
  for (const auto& [kind, s] : report.summary) {
    summary[to_string(kind)] = json{{"passed", s.passed}, {"failed", s.failed}};
  }
  json info = json::object();
  for (const auto& [key, count] : report.info) info[key] = count;
  json doc{{"ell", report.ell},
           {"fatal_failure", report.has_fatal_failure()},
           {"counterexample", report.has_counterexample()},
           {"summary", std::move(summary)},
           {"info", std::move(info)},
           {"checks", std::move(checks)}};
  return doc.dump(2) + "\n";
}

std::string format_report_text(const CongruenceReport& report) {
  std::ostringstream out;
  out << "ell = " << report.ell << "\n";
  for (const auto& r : report.checks) {
    out << to_string(r.kind) << "  a[" << r.m << "," << r.n << "]  p=" << r.prime << "  required>=" << r.required
        << "  observed=" << r.observed.to_string() << "  " << (r.passed ? "pass" : "FAIL") << "\n";
  }
  for (const auto& [kind, s] : report.summary) {
    out << "summary " << to_string(kind) << ": " << s.passed << " passed, " << s.failed << " failed\n";
  }
  for (const auto& [key, count] : report.info) out << "info " << key << ": " << count << "\n";
  return out.str();
}

}  // namespace modpoly
