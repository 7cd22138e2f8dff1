#include "cli.hpp"

#include "modpoly/closedform.hpp"
#include "modpoly/jfun.hpp"
#include "modpoly/recurrence.hpp"
#include "modpoly/serialize.hpp"
#include "modpoly/solver.hpp"
#include "modpoly/sutherland.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace modpoly::cli {

namespace {

// Full polynomials are cheap up to here; crosscheck includes the solver row.
constexpr int kCrosscheckSolverMaxEll = 13;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (!cfg.output_path) {
    out << text;
    return;
  }
  std::ofstream file(*cfg.output_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + *cfg.output_path);
  file << text;
}

JTable solver_table(const RunConfig& cfg) {
  const std::int64_t need = solver_min_j_count(cfg.ell);
  const std::int64_t count = cfg.precision_override.value_or(need);
  if (count < need) {
    throw std::out_of_range("--precision " + std::to_string(count) + " is below the solver minimum " +
                            std::to_string(need));
  }
  return j_coefficients(count);
}

int run_jcoeff(std::int64_t count, Format format, const RunConfig& cfg, std::ostream& out) {
  if (count < 1) throw UsageError("--count must be >= 1");
  const JTable j = j_coefficients(count);
  std::string text;
  if (format == Format::Json) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (std::int64_t i = -1; i < count; ++i) values.push_back(to_decimal(j.c(i)));
    text = nlohmann::ordered_json{{"first_index", -1}, {"coefficients", values}}.dump(2) + "\n";
  } else {
    for (std::int64_t i = -1; i < count; ++i) text += std::to_string(i) + " " + to_decimal(j.c(i)) + "\n";
  }
  write_output(cfg, text, out);
  return kOk;
}

BigInt single_coefficient(int ell, int m, const std::string& method, const JTable& j) {
  if (method == "closed") return coeff_closed(CoeffRequest(ell, m), j);
  if (method == "recurrence") return coeff_recurrence(ell, m, j);
  if (method == "small") return coeff_small_m(CoeffRequest(ell, m), j);
  throw UsageError("unknown --method " + method);
}

int run_coeff(const RunConfig& cfg, int m, const std::string& method, std::ostream& out) {
  if (m < 0 || m > cfg.ell) throw UsageError("--m must satisfy 0 <= m <= ell");
  const JTable j = j_coefficients(std::max(1, m));
  write_output(cfg, to_decimal(single_coefficient(cfg.ell, m, method, j)) + "\n", out);
  return kOk;
}

std::vector<BigInt> compute_row(const RunConfig& cfg, int m_max, const std::string& method, const JTable& j) {
  if (method == "closed") return closed_row(cfg.ell, m_max, j, cfg.threads);
  if (method == "recurrence") return recurrence_row(cfg.ell, m_max, j);
  throw UsageError("row supports --method closed|recurrence");
}

int run_row(const RunConfig& cfg, const std::string& method, Format format, std::ostream& out) {
  const int m_max = cfg.m_max.value_or(cfg.ell);
  const JTable j = j_coefficients(std::max(1, m_max));
  const auto row = compute_row(cfg, m_max, method, j);
  std::string text;
  if (format == Format::Json) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (int m = 0; m <= m_max; ++m) {
      values.push_back({{"m", m}, {"value", to_decimal(row[static_cast<std::size_t>(m)])}});
    }
    text = nlohmann::ordered_json{{"ell", cfg.ell}, {"row", values}}.dump(2) + "\n";
  } else {
    for (int m = 0; m <= m_max; ++m) text += std::to_string(m) + " " + to_decimal(row[static_cast<std::size_t>(m)]) + "\n";
  }
  write_output(cfg, text, out);
  return kOk;
}

int run_poly(const RunConfig& cfg, Format format, std::ostream& out) {
  const ModularPolynomial poly = solve_full_polynomial(cfg.ell, solver_table(cfg));
  write_output(cfg, format == Format::Json ? emit_polynomial_json(poly) : write_sutherland(poly), out);
  return kOk;
}

ModularPolynomial load_file(const std::string& path, int ell) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  const SutherlandFile file = parse_sutherland(in);
  if (file.ell != ell) {
    throw std::runtime_error(path + " holds Phi_" + std::to_string(file.ell) + ", expected ell = " + std::to_string(ell));
  }
  return to_polynomial(file);
}

int run_check(const RunConfig& cfg, const std::optional<std::string>& file, Format format, std::ostream& out) {
  const bool want_row = cfg.check_set.contains(CheckKind::Prop22) || cfg.check_set.contains(CheckKind::Prop23) ||
                        cfg.check_set.contains(CheckKind::Conj25);
  const bool want_poly = cfg.check_set.contains(CheckKind::Conj12);

  std::optional<ModularPolynomial> poly;
  if (file) {
    poly = load_file(*file, cfg.ell);
  } else if (want_poly || (want_row && cfg.ell < 3)) {
    poly = solve_full_polynomial(cfg.ell, solver_table(cfg));
  }

  CongruenceReport report;
  report.ell = cfg.ell;
  if (want_row) {
    std::vector<BigInt> row;
    if (poly) {
      row = poly->top_row();
    } else {
      row = recurrence_row(cfg.ell, cfg.ell, j_coefficients(cfg.ell));
    }
    row.erase(row.begin());  // m = 0
    report.merge(check_row(cfg.ell, row, cfg.check_set));
  }
  if (want_poly) report.merge(check_conjecture_div(*poly));

  write_output(cfg, format == Format::Json ? emit_report_json(report) : format_report_text(report), out);
  if (report.has_fatal_failure()) return kFatalCheck;
  if (report.has_counterexample()) return kCounterexample;
  return kOk;
}

int run_crosscheck(const RunConfig& cfg, std::ostream& out) {
  const int ell = cfg.ell;
  const int m_max = cfg.m_max.value_or(ell);
  const bool with_solver = ell <= kCrosscheckSolverMaxEll;
  const JTable j = with_solver ? solver_table(cfg) : j_coefficients(std::max(1, m_max));

  const auto closed = closed_row(ell, m_max, j, cfg.threads);
  const auto recur = recurrence_row(ell, m_max, j);
  std::optional<std::vector<BigInt>> solved;
  if (with_solver) solved = solve_full_polynomial(ell, j).top_row();

  std::ostringstream text;
  std::size_t mismatches = 0;
  for (int m = 0; m <= m_max; ++m) {
    const auto i = static_cast<std::size_t>(m);
    bool ok = closed[i] == recur[i];
    if (m >= 1 && m <= 7 && m < ell) ok = ok && coeff_small_m(CoeffRequest(ell, m), j) == closed[i];
    if (solved) ok = ok && (*solved)[i] == closed[i];
    if (!ok) ++mismatches;
    text << m << " " << (ok ? "agree" : "MISMATCH") << " " << to_decimal(closed[i]) << "\n";
  }
  text << "methods: closed, recurrence" << (m_max >= 1 && ell > 1 ? ", small(m<=7)" : "") << (solved ? ", solver" : "")
       << "\n";
  text << (mismatches == 0 ? "all agree" : std::to_string(mismatches) + " mismatches") << "\n";
  write_output(cfg, text.str(), out);
  return mismatches == 0 ? kOk : kFatalCheck;
}

Format pick_format(const std::string& name, Format fallback) {
  if (name.empty()) return fallback;
  if (name == "json") return Format::Json;
  if (name == "text") return Format::Text;
  throw UsageError("--format must be json or text");
}

}  // namespace

void RunConfig::validate() const {
  if (!is_prime(ell)) throw std::invalid_argument("--ell must be a prime, got " + std::to_string(ell));
  if (m_max && (*m_max < 0 || *m_max > ell)) throw std::invalid_argument("--m-max must satisfy 0 <= K <= ell");
  if (threads == 0) throw std::invalid_argument("--threads must be positive");
}

unsigned default_threads() {
  if (const char* env = std::getenv("MODPOLY_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

CheckSet parse_check_set(const std::string& list) {
  CheckSet out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto kind = parse_check_kind(item);
    if (!kind) throw std::invalid_argument("unknown check '" + item + "' (expected prop22, prop23, conj25, conj12)");
    out.insert(*kind);
  }
  return out;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficients of classical modular polynomials from the Fourier coefficients of j"};
  app.name("modpoly");
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.threads = default_threads();
  std::string format_name;
  std::string method = "closed";
  std::string row_method = "recurrence";
  std::string set_list;
  std::optional<std::string> file;
  std::int64_t count = 0;
  int m = 0;
  int m_max = -1;
  std::int64_t precision = 0;
  std::string out_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "json or text");
    sub->add_option("--out", out_path, "write output to this file instead of stdout");
    sub->add_option("--threads", cfg.threads, "parallelism budget (default $MODPOLY_THREADS or 1)");
  };
  auto add_ell = [&](CLI::App* sub) { sub->add_option("--ell", cfg.ell, "prime ell")->required(); };

  auto* jcoeff = app.add_subcommand("jcoeff", "print c_{-1} .. c_{N-1}");
  jcoeff->add_option("--count", count, "number of coefficients beyond c_{-1}")->required();
  add_common(jcoeff);

  auto* coeff = app.add_subcommand("coeff", "print a_{L,L-M}");
  add_ell(coeff);
  coeff->add_option("--m", m, "row offset M")->required();
  coeff->add_option("--method", method, "closed | recurrence | small");
  add_common(coeff);

  auto* row = app.add_subcommand("row", "print a_{L,L-m} for m = 0..K");
  add_ell(row);
  row->add_option("--m-max", m_max, "largest m (default L)");
  row->add_option("--method", row_method, "closed | recurrence (default recurrence)");
  add_common(row);

  auto* poly = app.add_subcommand("poly", "solve for the whole polynomial");
  add_ell(poly);
  poly->add_option("--precision", precision, "number of j coefficients to use");
  add_common(poly);

  auto* check = app.add_subcommand("check", "run divisibility checks on computed or ingested coefficients");
  add_ell(check);
  check->add_option("--file", file, "coefficient table in [m,n] value format");
  check->add_option("--set", set_list, "comma list from prop22,prop23,conj25,conj12 (default all)");
  check->add_option("--precision", precision, "number of j coefficients for the solver");
  add_common(check);

  auto* cross = app.add_subcommand("crosscheck", "compare closed form, recurrence, and solver rows");
  add_ell(cross);
  cross->add_option("--m-max", m_max, "largest m (default L)");
  cross->add_option("--precision", precision, "number of j coefficients for the solver");
  add_common(cross);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (!out_path.empty()) cfg.output_path = out_path;
    if (m_max >= 0) cfg.m_max = m_max;
    if (precision > 0) cfg.precision_override = precision;
    if (!set_list.empty()) cfg.check_set = parse_check_set(set_list);

    if (jcoeff->parsed()) {
      if (cfg.threads == 0) throw UsageError("--threads must be positive");
      return run_jcoeff(count, pick_format(format_name, Format::Text), cfg, out);
    }
    if (m_max < -1) throw UsageError("--m-max must be non-negative");
    cfg.validate();
    if (coeff->parsed()) return run_coeff(cfg, m, method, out);
    if (row->parsed()) return run_row(cfg, row_method, pick_format(format_name, Format::Text), out);
    if (poly->parsed()) return run_poly(cfg, pick_format(format_name, Format::Json), out);
    if (check->parsed()) return run_check(cfg, file, pick_format(format_name, Format::Json), out);
    if (cross->parsed()) return run_crosscheck(cfg, out);
  } catch (const IntegralityError& e) {
    err << "modpoly: " << e.what() << "\n";
    return kFatalCheck;
  } catch (const std::invalid_argument& e) {
    err << "modpoly: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "modpoly: " << e.what() << "\n";
    return kComputation;
  }
  return kUsage;
}

}  // namespace modpoly::cli
