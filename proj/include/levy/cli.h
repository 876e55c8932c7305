#pragma once

#include "levy/errors.h"
#include "levy/levy_models.h"
#include "levy/quadrature.h"
#include "levy/time_change.h"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace levy::cli {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kThreadsEnv = "LEVY_SMILE_THREADS";
inline constexpr const char* kErrorToken = "ERR";

// Invalid configuration: exit code 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Grid point with the text it was written as (used for column labels).
struct GridValue {
  double value = 0.0;
  std::string label;
};

struct RunConfig {
  std::string command;
  std::string model_name;
  ModelParams model;
  std::vector<std::pair<std::string, std::string>> model_entries;  // for the header
  std::vector<GridValue> k, t, K;
  std::vector<std::string> columns;  // empty means every column of the command
  quad::Options tol{};
  int order = 2;
  std::optional<CIRParams> cir;
  std::optional<TimeChangeMoments> moments;
  std::uint64_t seed = 0;
};

// Number or exact fraction "a/b" (e.g. "5/252").
double parse_number(const std::string& text);

// Comma-separated list of numbers/fractions, or a range "start:step:stop".
std::vector<GridValue> parse_grid(const std::string& text);

// key = value configuration; '#' starts a comment. Validates the grids for
// `command` (table, smile, iv-errors, atm, varcall, timechange).
RunConfig parse_config(std::istream& in, const std::string& command);
RunConfig load_config(const std::string& path, const std::string& command);

// Thread count from LEVY_SMILE_THREADS, else the hardware concurrency.
int default_threads();

struct CommandResult {
  std::string output;                // CSV with commented header
  int failed_cells = 0;
  std::vector<std::string> messages;  // one per failed cell, in grid order
  int exit_code() const { return failed_cells > 0 ? 2 : 0; }
};

CommandResult run_command(const RunConfig& config, int threads);

}  // namespace levy::cli
