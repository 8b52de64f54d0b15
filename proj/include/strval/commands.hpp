#pragma once

#include "strval/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace strval {

const char* version();

/// Resolved run configuration shared by every command.
struct RunConfig {
  std::string family = "A";
  int rank = 1;
  std::optional<std::vector<int>> word;
  std::optional<std::vector<int>> lambda;
  std::optional<std::vector<int>> mu;
  std::string data;  // "builtin:a1-toy", "builtin:flag" or a path to an isotypic-data JSON file
  int level_cap = 2;
  int scaling = 1;   // string-polytope: check Delta(k lambda) = k Delta(lambda) for 2 <= k <= scaling
  int random = 0;    // seeded random dual vectors per word
  std::uint64_t seed = 1;
  std::string format = "json";
  std::int64_t dimension_cap = kDefaultDimensionCap;
  int samples = 200;
  int levels = 7;
  int step_cap = kDefaultSubductionStepCap;
  std::string valuation = "highest";
  std::vector<int> order;
  Json poly;
  Json generators;
};

/// Throws UsageError on unknown keys or ill-typed values.
RunConfig parse_config(const Json& j);
Json to_json(const RunConfig& c);

std::vector<std::string> command_names();

/// Report envelope: {"tool", "version", "command", "config", "result", "passed"}.
/// Throws UsageError for an unknown command or an invalid configuration.
Json run_command(const std::string& command, const RunConfig& config);

/// "json" (indented), "csv" (key,value rows) or "table" (aligned; decimals marked "~").
std::string render(const Json& report, const std::string& format);

}  // namespace strval
