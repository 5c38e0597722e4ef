#pragma once
// Configuration text format and CSV output.
//
// A configuration file holds one `key = value` per line; `#` starts a comment.
// Keys: N, rho, g_r, r_d, T, r_s, K_s1..K_s4, K_d1..K_d3, x_g, x_d0,
// warmup_steps. Vector values are written `x,y` (brackets optional). Unknown
// keys are an error.

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shepherd/experiment.hpp"
#include "shepherd/guidance.hpp"
#include "shepherd/route.hpp"
#include "shepherd/scenario.hpp"

namespace shepherd {

/// Bad configuration text, flag value or grid.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output; the message names the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Applies one `key=value` assignment. Throws UsageError.
void apply_setting(ScenarioConfig& config, std::string_view key, std::string_view value);

/// Parses configuration text on top of `base`. Throws UsageError with the line number.
ScenarioConfig parse_config(std::string_view text, ScenarioConfig base = {});

ScenarioConfig load_config(const std::filesystem::path& path);

/// The full configuration in the text format; parse_config(format_config(c)) == c.
std::string format_config(const ScenarioConfig& config);

/// "N1,N2,...;rho1,rho2,..." expanded N-major.
std::vector<GridCell> parse_grid(std::string_view text);

/// 9 significant digits.
std::string format_number(double v);

// Writers. Indices are 1-based on disk.
void write_tour(std::ostream& os, const Tour& tour);
void write_cost_trace(std::ostream& os, const std::vector<double>& trace);
void write_trajectory(std::ostream& os, const RunRecord& run);
void write_phases(std::ostream& os, const RunRecord& run);
void write_trial_records(std::ostream& os, const std::vector<TrialRecord>& records);
void write_summaries(std::ostream& os, const std::vector<CellSummary>& summaries);

/// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace shepherd
