#include "rydline/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "rydline/constants.hpp"

namespace rydline::app {

namespace {

constexpr double kTwoPi = 2.0 * 3.141592653589793238462643383279502884;

using units::Dimension;

double parse_real(const std::string& path, const std::string& token) {
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    while (end && *end && std::isspace(static_cast<unsigned char>(*end))) ++end;
    if (!end || end == token.c_str() || *end != '\0') {
        throw ConfigError(path + ": '" + token + "' is not a number");
    }
    return v;
}

int parse_int(const std::string& path, const std::string& token) {
    const double v = parse_real(path, token);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
        throw ConfigError(path + ": '" + token + "' is not an integer");
    }
    return i;
}

double parse_dimensioned(const std::string& path, const std::string& token, Dimension dim) {
    try {
        return units::parse_quantity_as(token, dim);
    } catch (const std::exception& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

std::vector<FieldDef> make_registry() {
    std::vector<FieldDef> defs;
    auto quantity = [&defs](std::string path, Dimension dim, std::string summary,
                            std::function<void(RunConfig&, double)> store) {
        FieldDef def;
        def.path = path;
        def.kind = FieldKind::Quantity;
        def.dimension = dim;
        def.summary = std::move(summary);
        def.apply = [path, dim, store](RunConfig& cfg, const std::string& token) {
            store(cfg, parse_dimensioned(path, token, dim));
        };
        defs.push_back(std::move(def));
    };
    auto real = [&defs](std::string path, std::string summary,
                        std::function<void(RunConfig&, double)> store) {
        FieldDef def;
        def.path = path;
        def.kind = FieldKind::Real;
        def.summary = std::move(summary);
        def.apply = [path, store](RunConfig& cfg, const std::string& token) {
            store(cfg, parse_real(path, token));
        };
        defs.push_back(std::move(def));
    };
    auto integer = [&defs](std::string path, std::string summary,
                           std::function<void(RunConfig&, int)> store) {
        FieldDef def;
        def.path = path;
        def.kind = FieldKind::Integer;
        def.summary = std::move(summary);
        def.apply = [path, store](RunConfig& cfg, const std::string& token) {
            store(cfg, parse_int(path, token));
        };
        defs.push_back(std::move(def));
    };
    auto text = [&defs](std::string path, std::string summary,
                        std::function<void(RunConfig&, const std::string&)> store) {
        FieldDef def;
        def.path = path;
        def.kind = FieldKind::Text;
        def.summary = std::move(summary);
        def.apply = std::move(store);
        defs.push_back(std::move(def));
    };

    quantity("geometry.disc_radius", Dimension::Length, "disc radius R",
             [](RunConfig& c, double v) { c.geometry.disc_radius = v; });
    quantity("geometry.atom_height", Dimension::Length, "atom height h above the disc",
             [](RunConfig& c, double v) { c.geometry.atom_height = v; });
    quantity("geometry.wire_length", Dimension::Length, "wire length L",
             [](RunConfig& c, double v) { c.geometry.wire_length = v; });
    real("geometry.log_coax_ratio", "ln(b/a) of the coax-like cross-section",
         [](RunConfig& c, double v) { c.geometry.log_coax_ratio = v; });
    quantity("geometry.pillar_height", Dimension::Length, "support pillar height H",
             [](RunConfig& c, double v) { c.geometry.pillar_height = v; });

    integer("atom.principal_n", "principal quantum number N",
            [](RunConfig& c, int v) {
                if (v < 2) throw ConfigError("atom.principal_n: N must be >= 2");
                c.atom.principal_n = v;
            });
    quantity("atom.species_mass", Dimension::Mass, "atom mass",
             [](RunConfig& c, double v) {
                 if (v <= 0.0) throw ConfigError("atom.species_mass: mass must be positive");
                 c.atom.species_mass = v;
             });
    quantity("atom.trap_frequency", Dimension::AngularFrequency, "trap angular frequency",
             [](RunConfig& c, double v) { c.atom.trap_frequency = v; });

    integer("resonator.mode_index", "standing-wave mode index n",
            [](RunConfig& c, int v) {
                if (v < 1) throw ConfigError("resonator.mode_index: n must be >= 1");
                c.mode_index = v;
            });
    text("resonator.quality_factor", "Q, a number or 'budget' to use the loss budget",
         [](RunConfig& c, const std::string& token) {
             if (token == "budget") {
                 c.quality_from_budget = true;
                 return;
             }
             const double q = parse_real("resonator.quality_factor", token);
             if (q <= 0.0) throw ConfigError("resonator.quality_factor: Q must be positive");
             c.quality_from_budget = false;
             c.quality_factor = q;
         });
    real("resonator.velocity_ratio", "phase velocity as a fraction of v0",
         [](RunConfig& c, double v) {
             if (v <= 0.0) throw ConfigError("resonator.velocity_ratio: must be positive");
             c.velocity_ratio = v;
         });
    quantity("resonator.contact_resistance", Dimension::Resistance,
             "normal-metal contact resistance",
             [](RunConfig& c, double v) {
                 if (v < 0.0) throw ConfigError("resonator.contact_resistance: must be >= 0");
                 c.contact_resistance = v;
             });

    quantity("environment.temperature", Dimension::Temperature, "operating temperature",
             [](RunConfig& c, double v) {
                 if (v < 0.0) throw ConfigError("environment.temperature: must be >= 0");
                 c.temperature = v;
             });
    quantity("environment.patch_shift", Dimension::AngularFrequency,
             "measured patch-potential shift",
             [](RunConfig& c, double v) { c.environment.patch_shift = v; });
    quantity("environment.stray_island_radius", Dimension::Length,
             "stray-charge island radius (0 disables)",
             [](RunConfig& c, double v) { c.environment.stray_island_radius = v; });
    quantity("environment.stray_island_distance", Dimension::Length,
             "atom distance from the stray-charge island",
             [](RunConfig& c, double v) { c.environment.stray_island_distance = v; });
    quantity("environment.gamma_decay", Dimension::AngularFrequency,
             "atomic decay rate in simulations",
             [](RunConfig& c, double v) { c.gamma_decay = v; });
    quantity("environment.gamma_phi", Dimension::AngularFrequency,
             "atomic pure-dephasing rate in simulations",
             [](RunConfig& c, double v) { c.gamma_phi = v; });
    quantity("environment.atomic_dephasing", Dimension::AngularFrequency,
             "atomic dephasing rate in the budget report",
             [](RunConfig& c, double v) { c.atomic_dephasing = v; });
    integer("environment.stark_k", "parabolic manifold offset k; -1 means N-1",
            [](RunConfig& c, int v) { c.stark_k = v; });
    quantity("environment.interaction_time", Dimension::Time,
             "budget interaction time; 0 means pi hbar / g",
             [](RunConfig& c, double v) {
                 if (v < 0.0) throw ConfigError("environment.interaction_time: must be >= 0");
                 c.interaction_time = v;
             });

    text("simulation.scenario", "vacuum_rabi | state_transfer | two_atom_exchange",
         [](RunConfig& c, const std::string& token) {
             if (token != "vacuum_rabi" && token != "state_transfer" &&
                 token != "two_atom_exchange") {
                 throw ConfigError("simulation.scenario: unknown scenario '" + token + "'");
             }
             c.scenario = token;
         });
    quantity("simulation.t_max", Dimension::Time, "time-series span; 0 means scenario default",
             [](RunConfig& c, double v) {
                 if (v < 0.0) throw ConfigError("simulation.t_max: must be >= 0");
                 c.t_max = v;
             });
    integer("simulation.samples", "number of sample steps (0 emits header only)",
            [](RunConfig& c, int v) {
                if (v < 0) throw ConfigError("simulation.samples: must be >= 0");
                c.samples = v;
            });
    integer("simulation.fock_cutoff", "retained oscillator levels",
            [](RunConfig& c, int v) {
                if (v < 2) throw ConfigError("simulation.fock_cutoff: must be >= 2");
                c.fock_cutoff = v;
            });
    real("simulation.rel_tol", "integrator relative tolerance",
         [](RunConfig& c, double v) {
             if (v <= 0.0) throw ConfigError("simulation.rel_tol: must be positive");
             c.rel_tol = v;
         });
    real("simulation.abs_tol", "integrator absolute tolerance",
         [](RunConfig& c, double v) {
             if (v <= 0.0) throw ConfigError("simulation.abs_tol: must be positive");
             c.abs_tol = v;
         });

    text("output.format", "csv | json", [](RunConfig& c, const std::string& token) {
        if (token != "csv" && token != "json") {
            throw ConfigError("output.format: must be csv or json, got '" + token + "'");
        }
        c.format = token;
    });
    text("output.path", "output file; '-' means stdout",
         [](RunConfig& c, const std::string& token) { c.output_path = token; });

    return defs;
}

}  // namespace

RunConfig::RunConfig() {
    const Constants& c = constants();
    atom.trap_frequency = kTwoPi * 50e3;
    // 0.1 Ohm in Gaussian units.
    contact_resistance = 0.1 * 1e9 / (c.speed_of_light * c.speed_of_light);
    environment.patch_shift = kTwoPi * 7e6;
    gamma_decay = kTwoPi * 1e3;
    gamma_phi = kTwoPi * 1e3;
    atomic_dephasing = kTwoPi * 1e3;
}

rydberg::SurfaceEnvironment RunConfig::surface() const {
    rydberg::SurfaceEnvironment env = environment;
    env.atom_height = geometry.atom_height;
    return env;
}

const std::vector<FieldDef>& field_registry() {
    static const std::vector<FieldDef> registry = make_registry();
    return registry;
}

void apply_field(RunConfig& config, const std::string& path, const std::string& token) {
    for (const auto& def : field_registry()) {
        if (def.path == path) {
            def.apply(config, token);
            return;
        }
    }
    throw ConfigError("unknown configuration field '" + path + "'");
}

void apply_override(RunConfig& config, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("override '" + assignment + "' is not of the form path=value");
    }
    apply_field(config, assignment.substr(0, eq), assignment.substr(eq + 1));
}

namespace {

std::string scalar_token(const nlohmann::json& value, const std::string& path) {
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number() || value.is_boolean()) return value.dump();
    throw ConfigError(path + ": expected a string or number");
}

void load_external_caps(RunConfig& config, const nlohmann::json& body) {
    if (!body.is_object()) {
        throw ConfigError("resonator.external_caps: expected an object of label -> Q");
    }
    for (const auto& [label, q] : body.items()) {
        if (!q.is_number()) {
            throw ConfigError("resonator.external_caps." + label + ": expected a number");
        }
        const double val = q.get<double>();
        if (val <= 0.0) {
            throw ConfigError("resonator.external_caps." + label + ": Q must be positive");
        }
        config.external_caps.emplace_back(label, val);
    }
    std::sort(config.external_caps.begin(), config.external_caps.end());
}

}  // namespace

RunConfig load_config(const std::string& text, const std::string& origin) {
    RunConfig config;
    const bool blank = std::all_of(text.begin(), text.end(), [](unsigned char ch) {
        return std::isspace(ch) != 0;
    });
    if (blank) return config;

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    if (!doc.is_object()) throw ConfigError(origin + ": top level must be a JSON object");

    for (const auto& [section, body] : doc.items()) {
        if (!body.is_object()) {
            throw ConfigError(origin + ": '" + section + "' must be an object of settings");
        }
        for (const auto& [key, value] : body.items()) {
            const std::string path = section + "." + key;
            if (path == "resonator.external_caps") {
                load_external_caps(config, value);
                continue;
            }
            try {
                apply_field(config, path, scalar_token(value, path));
            } catch (const ConfigError& e) {
                throw ConfigError(origin + ": " + e.what());
            }
        }
    }
    return config;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_config(buffer.str(), path);
}

std::vector<std::string> sweepable_fields() {
    std::vector<std::string> paths;
    for (const auto& def : field_registry()) paths.push_back(def.path);
    return paths;
}

}  // namespace rydline::app
