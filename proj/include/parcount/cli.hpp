#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "parcount/common.hpp"
#include "parcount/group.hpp"

namespace parcount {

// Exit code contract: 0 success (and all agreement flags true), 2 config
// error, 3 budget/bound refusal, 4 identity or engine-agreement failure.
enum ExitCode { kOk = 0, kConfigError = 2, kBudgetRefused = 3, kMismatch = 4 };

struct RunConfig {
  std::string command;  // count | verify | porc | green
  std::string group = "GL2";
  std::vector<long long> qs;
  std::vector<int> parabolic;
  std::string quantity = "group";
  std::string engine = "both";
  long long budget = 0;  // 0 = default / environment override
  std::string format = "json";
  std::string out_path;
  long long modulus = 0;   // porc: 0 = automatic over {1,2,6}
  int degree_bound = 0;    // porc: 0 = n^2
  bool probe = false;      // porc: additive fiber probe instead of a count sweep
  int green_n = 2;
};

// Parses "GL2" / "SL3" / "gl2" style group names.
std::pair<GroupKind, int> parse_group_name(const std::string& s);
// Prime-power decomposition; ConfigError when q is not a prime power.
std::pair<int, int> prime_power(long long q);

// Validates the config, runs the command, writes reports; returns the exit
// code. All output paths are written atomically.
int run_cli(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace parcount
