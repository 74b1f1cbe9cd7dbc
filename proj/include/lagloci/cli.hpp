#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lagloci/cubic.hpp"

namespace lagloci::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kInvalidInput = 2, kInternal = 3 };

struct RunConfig {
  std::string command;  // verify-surface, verify-curve, null-check, classify-cubic, chi, verify-cert
  std::vector<std::string> inputs;
  std::optional<std::string> output;
  std::optional<int> order;
  bool emit_json = false;
  unsigned jobs = 1;
  std::optional<std::string> germ;  // verify-cert: germ file overriding the embedded one
};

struct RunResult {
  int exit_code;
  std::string report;  // for standard output
};

RunResult run_command(const RunConfig& cfg);

/// Argument parsing plus run_command; returns the process exit code.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

/// "X^3 + Y^3", "-1/2*X^2*Y + (1+i)*Y^3", "0".
std::string format_cubic(const ScalarCubic& f);
std::string format_quadratic(const ScalarQuadratic& q);

}  // namespace lagloci::cli
