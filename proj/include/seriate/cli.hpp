#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "seriate/graphs.hpp"
#include "seriate/linalg.hpp"

namespace seriate {

// Everything a single invocation needs. Exactly one of family / input_path
// is set for seriate and lines; bench uses them as optional row filters.
struct RunConfig {
  std::string command;
  std::optional<GraphFamilySpec> family;
  std::string input_path;
  std::string method = "auto";  // auto | graphical | montecarlo | oracle
  double tau = -1.0;            // < 0 selects the engine default
  double cluster_tol = kDefaultClusterTol;
  std::uint64_t samples = 5000;
  std::uint64_t seed = 0;
  std::string format = "csv";  // csv | json | svg (svg: lines only)
  std::string out_path;        // empty writes to the out stream
  bool count_only = false;
  bool extended = false;
  bool no_header = false;
  bool with_mc = false;
  int size_filter = 0;  // bench: restrict rows to one n
  int threads = 1;
};

// Worker count: SERIATE_THREADS when set and sane, otherwise the hardware
// count capped at 8.
int threads_from_env();

// Parses args (program name excluded), runs the subcommand, and returns the
// process exit code. Normal output goes to out, diagnostics to err.
//
// Exit codes: 0 success; 1 bad arguments, unreadable input, or numeric
// failure; 2 disconnected graph; 3 enumeration larger than the safety cap;
// 4 eigenspace dimension the chosen method cannot handle; 5 bench found a
// count mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seriate
