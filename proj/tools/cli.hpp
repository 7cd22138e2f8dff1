#pragma once

#include "modpoly/congruence.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace modpoly::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kComputation = 2,
  kFatalCheck = 3,
  kCounterexample = 4,
};

enum class Format { Json, Text };

struct RunConfig {
  int ell = 0;
  std::optional<int> m_max;
  std::optional<std::int64_t> precision_override;
  std::optional<std::string> output_path;
  CheckSet check_set = all_checks();
  unsigned threads = 1;
  std::optional<Format> format;

  /// Throws std::invalid_argument unless ell is prime and m_max <= ell.
  void validate() const;
};

/// Default for --threads: $MODPOLY_THREADS if set to a positive integer, else 1.
unsigned default_threads();

/// Parses "prop22,conj12,...". Throws std::invalid_argument on unknown names.
CheckSet parse_check_set(const std::string& list);

/// Runs one subcommand; `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modpoly::cli
