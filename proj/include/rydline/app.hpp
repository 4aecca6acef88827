#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rydline/config.hpp"
#include "rydline/dynamics.hpp"

namespace rydline::app {

/// 17 significant digits, C locale; the regression-diff format for all
/// numeric output.
std::string format_double(double value);

/// Q actually in force: the configured number, or the loss-budget total.
double effective_quality(const RunConfig& config);

/// Single-point design table, ordered and keyed with explicit units.
std::vector<std::pair<std::string, double>> estimate_rows(const RunConfig& config);

/// Decoherence-budget values plus the Q breakdown, ordered, numeric only.
std::vector<std::pair<std::string, double>> budget_rows(const RunConfig& config);

/// Builds the dynamics model the simulate scenarios run: the atom is tuned
/// onto the mode (zero detuning); losses come from the configured Q and
/// gamma rates.
dynamics::SystemModel scenario_model(const RunConfig& config);

/// One full scenario run: the model, the coupling and horizon actually used,
/// and the sampled series (empty columns when samples == 0). Propagates
/// dynamics::TruncationError when the Fock ladder clips.
struct ScenarioRun {
    dynamics::SystemModel model;
    double coupling = 0.0;  ///< erg
    double t_max = 0.0;     ///< s
    dynamics::TimeSeries series;
};
ScenarioRun run_scenario(const RunConfig& config);

/// Estimate+budget rows for each axis value, computed in parallel, returned
/// in input order. Unknown axes and empty value lists throw ConfigError.
std::vector<std::vector<std::pair<std::string, double>>> sweep_rows(
    const RunConfig& config, const std::string& axis, const std::vector<std::string>& values);

// Subcommands. Data goes to out, diagnostics to err; the return value is the
// process exit code (0 ok, 3 numerical-validity breach). Configuration
// errors throw ConfigError and the caller maps them to exit 2.
int cmd_estimate(const RunConfig& config, std::ostream& out, std::ostream& err, bool strict);
int cmd_budget(const RunConfig& config, std::ostream& out, std::ostream& err, bool strict);
int cmd_sweep(const RunConfig& config, const std::string& axis,
              const std::vector<std::string>& values, std::ostream& out, std::ostream& err,
              bool strict);
int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err, bool strict);

/// The --constants table: every stored constant, one per line, 17 digits.
void print_constants(std::ostream& out);

extern const char* const kVersion;

}  // namespace rydline::app
