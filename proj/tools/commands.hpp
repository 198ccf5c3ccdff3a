#pragma once

#include <string>

#include "llv/errors.hpp"
#include "llv/report.hpp"

namespace llv::cli {

/// Bad flags or flag combinations; exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::string fixture;  // k3 | bogomolov | torus
  std::string input;    // ring-description file
  int b2 = 5;
  int n = 2;
  int g = 2;
  int dim = 0;          // kuga: number of generators
  std::string q;        // diag:... or gram:...
  std::string field = "rational";
  long budget = 0;      // 0 picks the default sampling budget
  std::string beta;     // pw: comma-separated degree-2 coordinates
};

constexpr int kMaxB2 = 24;
constexpr int kMaxN = 3;
constexpr int kMaxTorusRank = 8;  // 2g
constexpr int kMaxCliffordGenerators = 10;

/// Runs one subcommand. Throws UsageError for bad configurations and ParseError,
/// DimensionError or ValidationError for bad input; check failures land in the report.
Report run(const RunConfig& cfg);

}  // namespace llv::cli
