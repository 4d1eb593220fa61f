#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// that tests can drive it in-process.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gpiv::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitIndeterminate = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitIo = 74;

inline constexpr const char* kToolName = "gpiverify";
inline constexpr const char* kToolVersion = "1.0.0";

/// Fully resolved settings of one run. Every field has a default.
struct RunConfig {
  std::string command;        // e.g. "check mri"
  std::string predicate;      // scan only
  long m2 = 1;
  long m3 = 1;
  double y2 = 13;
  double y3 = 13;
  std::optional<std::string> a;  // exact rational text; grid when absent
  std::optional<std::string> x;
  std::optional<std::string> z;
  std::optional<std::string> z_lo;
  std::optional<std::string> z_hi;
  int grid = 101;
  std::string width = "1/1000000";
  int refine_max = 20;
  std::uint64_t seed = 1;
  std::uint64_t n = 0;  // Monte Carlo draws; 0 skips sampling
  unsigned jobs = 1;
  bool all = false;
  bool find_violation = false;
  bool compare_appendix = false;
  bool timing = false;
  std::string data_dir;
  std::string out;  // empty writes to the output stream
};

/// JSON form embedded in reports. `jobs`, `out` and `timing` are omitted so
/// that reports do not depend on how the run was executed.
nlohmann::json to_json(const RunConfig& c);
/// Applies the keys present in j on top of c.
void apply_json(RunConfig& c, const nlohmann::json& j);

/// Runs the program. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpiv::cli
