#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "persuasion/model.hpp"
#include "persuasion/multi_receiver.hpp"
#include "persuasion/oracle.hpp"

namespace persuasion::cli {

enum class Mode { Solve, RegimeMap, Sweep, Simulate, Verify };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);

/// Process exit codes.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitCheckFailure = 1,
  kExitUsage = 2,
  kExitIO = 3,
};

/// Either a fixed value (`0.3`) or `min:max:steps` with steps >= 1. A range
/// marks the parameter as swept even when steps is 1.
struct ParamRange {
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = 1;
  bool swept = false;

  static ParamRange fixed(double value) { return {value, value, 1, false}; }
  /// Evenly spaced, both ends included; a single step yields min.
  std::vector<double> values() const;
};

/// Throws InvalidConfig on malformed text.
ParamRange parse_range(std::string_view text);

inline constexpr std::array<Parameter, 5> kCanonicalOrder{
    Parameter::Rho0, Parameter::P, Parameter::Q, Parameter::V, Parameter::K};

struct RunConfig {
  Mode mode = Mode::Solve;
  /// Indexed by Parameter.
  std::array<ParamRange, 5> ranges{
      ParamRange::fixed(0.5), ParamRange::fixed(0.9), ParamRange::fixed(0.1),
      ParamRange::fixed(0.0), ParamRange::fixed(0.0)};
  std::optional<SegmentShares> shares;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 42;
  double grid_step = 1e-4;
  std::string output_path;  ///< empty writes to stdout
  std::size_t draws = 1000;
  std::size_t pairs = 50;
  std::optional<double> rg;
  std::optional<double> rb;

  ParamRange& range(Parameter p) { return ranges[static_cast<std::size_t>(p)]; }
  const ParamRange& range(Parameter p) const {
    return ranges[static_cast<std::size_t>(p)];
  }
  std::vector<Parameter> swept() const;
  /// Parameters at their fixed values; throws InvalidConfig if any is swept.
  ModelParams fixed_params() const;
};

using KeyValues = std::map<std::string, std::string>;

/// `key = value` lines; `#` starts a comment; blank lines are skipped.
/// Keys are normalized to lower case with '_' read as '-'.
KeyValues parse_config_text(std::string_view text);
/// Reads and parses a file; IOFailure if it cannot be read.
KeyValues read_config_file(const std::string& path);

/// Builds a config from merged key/values (file first, flags layered on top
/// by the caller). Unknown keys and malformed values throw InvalidConfig.
RunConfig build_config(Mode mode, const KeyValues& values);

/// Shortest decimal that round-trips to the same double.
std::string format_number(double x);

/// Command bodies. Each writes CSV (header first, LF endings) to `out`.
void write_solve(const RunConfig& config, std::ostream& out);
void write_regime_map(const RunConfig& config, std::ostream& out);
void write_sweep(const RunConfig& config, std::ostream& out);
void write_simulate(const RunConfig& config, std::ostream& out);
/// Returns true when every check passed.
bool write_verify(const RunConfig& config, std::ostream& out);

/// Runs the configured command, writing to config.output_path or `fallback`.
/// Returns the exit code; library errors map to usage or IO codes and their
/// message goes to `err`.
int run(const RunConfig& config, std::ostream& fallback, std::ostream& err);

}  // namespace persuasion::cli
