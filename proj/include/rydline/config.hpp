#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rydline/electrostatics.hpp"
#include "rydline/rydberg.hpp"
#include "rydline/units.hpp"

namespace rydline::app {

/// Anything wrong with user-supplied configuration; the CLI maps it to exit 2.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Full run description. Every field has a working default: the flagship
/// operating point N=50, R=h=10 um, L=3 mm, n=1, Q=1e6, T=100 mK,
/// trap 2pi 50 kHz, ln(b/a)=1, v=v0. All stored values are internal
/// Gaussian-CGS; the JSON/--set boundary parses lab-unit strings.
struct RunConfig {
    RunConfig();

    electrostatics::Geometry geometry;
    rydberg::AtomSpec atom;

    int mode_index = 1;
    double quality_factor = 1e6;
    bool quality_from_budget = false;  ///< true: Q comes from the loss budget
    double velocity_ratio = 1.0;       ///< v / v0
    double contact_resistance = 0.0;   ///< s/cm, set in the constructor (0.1 Ohm)
    std::vector<std::pair<std::string, double>> external_caps;

    double temperature = 0.1;  ///< K
    rydberg::SurfaceEnvironment environment;
    double gamma_decay = 0.0;       ///< rad/s, atomic decay in simulations
    double gamma_phi = 0.0;         ///< rad/s, atomic pure dephasing in simulations
    double atomic_dephasing = 0.0;  ///< rad/s, budget line item
    int stark_k = -1;               ///< manifold offset; -1 means N-1
    double interaction_time = 0.0;  ///< s; 0 means pi hbar / g

    std::string scenario = "vacuum_rabi";
    double t_max = 0.0;  ///< s; 0 means scenario default
    int samples = 400;
    int fock_cutoff = 8;
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;

    std::string format = "csv";  ///< csv | json
    std::string output_path = "-";

    /// Environment with atom_height synchronized to the geometry.
    rydberg::SurfaceEnvironment surface() const;
};

enum class FieldKind { Quantity, Real, Integer, Text };

/// One settable configuration field: dotted path, token parser, description.
struct FieldDef {
    std::string path;
    FieldKind kind = FieldKind::Real;
    units::Dimension dimension = units::Dimension::Dimensionless;
    std::string summary;
    std::function<void(RunConfig&, const std::string&)> apply;
};

const std::vector<FieldDef>& field_registry();

/// Applies one "dotted.path=value" override. Unknown paths and bad values
/// throw ConfigError naming the offender.
void apply_override(RunConfig& config, const std::string& assignment);

/// Applies a bare token to a known field path.
void apply_field(RunConfig& config, const std::string& path, const std::string& token);

/// Parses a JSON config document. Empty or whitespace-only text means all
/// defaults. Unknown keys are rejected with their full path.
RunConfig load_config(const std::string& text, const std::string& origin);

RunConfig load_config_file(const std::string& path);

/// Dotted paths accepted by apply_field / sweep axes, in registry order.
std::vector<std::string> sweepable_fields();

}  // namespace rydline::app
