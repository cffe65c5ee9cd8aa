#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace bargmann::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string suite;
  int n = 1;
  int m = 1;
  double tol = -1.0;  // < 0 keeps each case's default
};

/// Thrown for suite/parameter combinations that make no sense (usage errors).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// {suite, cases: [{name, status, measured, tol, bound}], pass}
nlohmann::ordered_json run_verify(const VerifyOptions& opts);

/// "%.16e"
std::string format_double(double v);

}  // namespace bargmann::cli
