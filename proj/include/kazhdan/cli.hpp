// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kazhdan::cli {

enum class OutputFormat { human, structured };

/// Effective configuration of one run; echoed verbatim into every report.
struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  double p = 2.0;
  std::string q;  // decimal or prime^exponent
  std::uint64_t q_max = 10000;
  std::string method = "eigen";
  std::string kappa_method;  // certify only; empty selects eigen at p = 2 and interp otherwise
  int restarts = 32;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  int mesh = 41;
  double weight = 1.0;
  std::string link;
  std::string emit_graph;
  std::string output;
  bool check_bound = false;
  bool allow_irregular = false;
  bool witness = false;
  OutputFormat format = OutputFormat::structured;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;

/// Parses argv (without the program name) and executes one subcommand,
/// writing the report to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kazhdan::cli
