#include "rydline/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <nlohmann/json.hpp>

#include "rydline/constants.hpp"
#include "rydline/resonator.hpp"

namespace rydline::app {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

using ordered_json = nlohmann::ordered_json;

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char ch : field) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

double fF_per_cm() {
    const double c = constants().speed_of_light;
    return 1.0 / (1e-24 * c * c);  // Gaussian cm -> femtofarad
}

struct DesignPoint {
    double cd = 0.0;
    double cw = 0.0;
    double velocity = 0.0;
    double omega = 0.0;       // mode, rad/s
    double omega_atom = 0.0;  // transition, rad/s
    double dipole = 0.0;
    double g = 0.0;
    double quality = 0.0;
    double kappa = 0.0;
    resonator::ModeSpec mode;
};

DesignPoint design_point(const RunConfig& cfg) {
    cfg.geometry.validate();
    DesignPoint p;
    const Constants& c = constants();
    p.cd = electrostatics::disc_capacitance(cfg.geometry.disc_radius);
    p.cw = electrostatics::wire_capacitance(cfg.geometry.wire_length, cfg.geometry.log_coax_ratio);
    p.velocity = cfg.velocity_ratio * c.speed_of_light;
    p.omega = resonator::mode_frequency(cfg.mode_index, p.velocity, cfg.geometry.wire_length);
    p.omega_atom = rydberg::transition_frequency(cfg.atom.principal_n);
    p.dipole = rydberg::dipole_matrix_element(cfg.atom.principal_n);
    // Operating point: the line is trimmed onto the atomic transition, so the
    // exchange coupling is evaluated at omega_atom. How far the configured
    // length actually is from that point is reported separately as the
    // resonance-mismatch row.
    p.g = resonator::coupling_g(p.dipole, p.omega_atom, cfg.geometry.atom_height,
                                cfg.geometry.wire_length);
    p.quality = effective_quality(cfg);
    p.kappa = resonator::cavity_decay(p.omega, p.quality);
    p.mode = resonator::ModeSpec::from_geometry(cfg.mode_index, cfg.geometry, p.velocity,
                                                p.quality);
    return p;
}

bool rwa_questionable(const DesignPoint& p) {
    return p.g / (constants().hbar * p.omega_atom) > 1e-2;
}

void emit_warnings(const RunConfig& cfg, const DesignPoint& p, std::ostream& err) {
    if (!cfg.geometry.long_wire_limit_ok()) {
        err << "warning: wire length is not >> disc radius (L <= 10 R); the closed-form"
               " capacitance and coupling expressions degrade in this regime\n";
    }
    if (rwa_questionable(p)) {
        err << "warning: g/(hbar omega) exceeds 1e-2; the excitation-conserving coupling"
               " model is questionable this deep into the strong-coupling regime\n";
    }
}

std::vector<std::pair<std::string, double>> key_rows(const RunConfig& cfg, const DesignPoint& p) {
    const Constants& c = constants();
    const double hbar = c.hbar;
    const double h = cfg.geometry.atom_height;
    const double length = cfg.geometry.wire_length;

    const double g_alpha = resonator::coupling_g_dimensionless(
        cfg.atom.principal_n, cfg.mode_index, p.velocity, h, p.omega_atom);
    const double volume = resonator::mode_volume(h, length);
    const double g_volume = p.dipole * std::sqrt(kTwoPi * hbar * p.omega_atom / volume);
    const double g_lo = std::min({p.g, g_alpha, g_volume});
    const double g_hi = std::max({p.g, g_alpha, g_volume});
    const double g_spread = (g_hi - g_lo) / ((p.g + g_alpha + g_volume) / 3.0);

    const double j_full = electrostatics::coupling_coefficient_full(cfg.geometry);
    const double j_simple = electrostatics::coupling_coefficient_simple(h, length);
    const double j_free = electrostatics::free_space_coupling(length);
    const double d2 = p.dipole * p.dipole;

    const double check = std::abs(p.omega * length / (cfg.mode_index * kPi * p.velocity) - 1.0);

    std::vector<std::pair<std::string, double>> rows;
    rows.emplace_back("disc_capacitance_fF", p.cd * fF_per_cm());
    rows.emplace_back("wire_capacitance_fF", p.cw * fF_per_cm());
    rows.emplace_back("mode_frequency_GHz", p.omega / kTwoPi / 1e9);
    rows.emplace_back("mode_frequency_check_rel", check);
    rows.emplace_back("transition_frequency_GHz", p.omega_atom / kTwoPi / 1e9);
    rows.emplace_back("resonance_mismatch_rel", (p.omega - p.omega_atom) / p.omega_atom);
    rows.emplace_back("dipole_moment_debye", p.dipole / 1e-18);
    rows.emplace_back("coupling_g_MHz", p.g / hbar / kTwoPi / 1e6);
    rows.emplace_back("coupling_g_alpha_MHz", g_alpha / hbar / kTwoPi / 1e6);
    rows.emplace_back("coupling_g_mode_volume_MHz", g_volume / hbar / kTwoPi / 1e6);
    rows.emplace_back("coupling_g_form_spread_rel", g_spread);
    rows.emplace_back("mode_volume_cm3", volume);
    rows.emplace_back("zero_point_charge_e", p.mode.zero_point_charge / c.electron_charge);
    rows.emplace_back("mode_mass_cgs", p.mode.effective_mass);
    rows.emplace_back("cavity_q", p.quality);
    rows.emplace_back("cavity_decay_kHz", p.kappa / kTwoPi / 1e3);
    rows.emplace_back("static_coupling_Hz", j_full * d2 / hbar / kTwoPi);
    rows.emplace_back("static_coupling_simple_Hz", j_simple * d2 / hbar / kTwoPi);
    rows.emplace_back("free_space_coupling_Hz", j_free * d2 / hbar / kTwoPi);
    rows.emplace_back("wire_to_free_space_ratio", j_simple / j_free);
    return rows;
}

struct BudgetTable {
    std::vector<rydberg::BudgetItem> items;
};

BudgetTable budget_table(const RunConfig& cfg) {
    const DesignPoint p = design_point(cfg);
    const rydberg::BudgetReport report = rydberg::decoherence_budget(
        cfg.atom, cfg.surface(), cfg.geometry, p.mode, p.g, cfg.temperature,
        cfg.atomic_dephasing, cfg.stark_k, cfg.interaction_time);

    BudgetTable table;
    table.items = report.items;
    const resonator::QBudget qb =
        resonator::q_budget(cfg.geometry, cfg.contact_resistance, cfg.external_caps);
    table.items.push_back({"q_radiative", qb.q_radiative, "",
                           "radiation from the support pillars, (L/H)^4"});
    table.items.push_back({"q_contact", qb.q_contact, "",
                           "normal-metal contact resistance cap, 1/R scaling (0 = superconducting"
                           " joint, excluded)"});
    table.items.push_back({"q_endcap", qb.q_endcap, "", "gold end-cap dissipation floor"});
    for (const auto& [label, q] : qb.external) {
        table.items.push_back({"q_external_" + label, q, "", "user-supplied loss channel"});
    }
    table.items.push_back({"q_total", qb.q_total, "", "harmonic sum of the finite channels"});
    return table;
}

void write_rows_csv(const std::vector<std::pair<std::string, double>>& rows, std::ostream& out) {
    out << "key,value\n";
    for (const auto& [key, value] : rows) out << key << ',' << format_double(value) << '\n';
}

void write_rows_json(const std::vector<std::pair<std::string, double>>& rows, std::ostream& out) {
    ordered_json doc = ordered_json::object();
    for (const auto& [key, value] : rows) doc[key] = value;
    out << doc.dump(2) << '\n';
}

}  // namespace

const char* const kVersion = "1.0.0";

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

double effective_quality(const RunConfig& config) {
    if (!config.quality_from_budget) return config.quality_factor;
    return resonator::q_budget(config.geometry, config.contact_resistance, config.external_caps)
        .q_total;
}

std::vector<std::pair<std::string, double>> estimate_rows(const RunConfig& config) {
    return key_rows(config, design_point(config));
}

std::vector<std::pair<std::string, double>> budget_rows(const RunConfig& config) {
    std::vector<std::pair<std::string, double>> rows;
    for (const auto& item : budget_table(config).items) rows.emplace_back(item.key, item.value);
    return rows;
}

dynamics::SystemModel scenario_model(const RunConfig& config) {
    const DesignPoint p = design_point(config);
    dynamics::SystemModel model;
    model.atom_count = config.scenario == "two_atom_exchange" ? 2 : 1;
    model.couplings.assign(model.atom_count, p.g);
    model.detunings.assign(model.atom_count, 0.0);
    model.fock_cutoff = config.fock_cutoff;
    model.kappa = p.kappa;
    model.gamma_decay = config.gamma_decay;
    model.gamma_phi = config.gamma_phi;
    model.mode_frequency = p.omega;
    return model;
}

int cmd_estimate(const RunConfig& config, std::ostream& out, std::ostream& err, bool strict) {
    const DesignPoint p = design_point(config);
    emit_warnings(config, p, err);
    const auto rows = key_rows(config, p);
    if (config.format == "json") {
        write_rows_json(rows, out);
    } else {
        write_rows_csv(rows, out);
    }
    if (strict && rwa_questionable(p)) {
        err << "error: excitation-conserving model invalid under --strict\n";
        return 3;
    }
    return 0;
}

int cmd_budget(const RunConfig& config, std::ostream& out, std::ostream& err, bool strict) {
    const DesignPoint p = design_point(config);
    emit_warnings(config, p, err);
    const BudgetTable table = budget_table(config);
    if (config.format == "json") {
        ordered_json doc = ordered_json::object();
        for (const auto& item : table.items) {
            doc[item.key] = {{"value", item.value}, {"unit", item.unit}, {"note", item.note}};
        }
        out << doc.dump(2) << '\n';
    } else {
        out << "key,value,unit,note\n";
        for (const auto& item : table.items) {
            out << item.key << ',' << format_double(item.value) << ',' << csv_escape(item.unit)
                << ',' << csv_escape(item.note) << '\n';
        }
    }
    if (strict && rwa_questionable(p)) {
        err << "error: excitation-conserving model invalid under --strict\n";
        return 3;
    }
    return 0;
}

std::vector<std::vector<std::pair<std::string, double>>> sweep_rows(
    const RunConfig& config, const std::string& axis, const std::vector<std::string>& values) {
    const auto& registry = field_registry();
    const bool known = std::any_of(registry.begin(), registry.end(),
                                   [&axis](const FieldDef& def) { return def.path == axis; });
    if (!known) {
        std::string msg = "unknown sweep axis '" + axis + "'; sweepable fields are:";
        for (const auto& def : registry) msg += "\n  " + def.path;
        throw ConfigError(msg);
    }
    if (values.empty()) throw ConfigError("sweep needs at least one axis value");

    using Row = std::vector<std::pair<std::string, double>>;
    std::vector<std::future<Row>> futures;
    futures.reserve(values.size());
    for (const std::string& token : values) {
        futures.push_back(std::async(std::launch::async, [&config, &axis, token]() {
            RunConfig point = config;
            apply_field(point, axis, token);
            Row row = estimate_rows(point);
            const Row budget = budget_rows(point);
            row.insert(row.end(), budget.begin(), budget.end());
            return row;
        }));
    }

    std::vector<Row> rows;
    rows.reserve(values.size());
    for (auto& f : futures) rows.push_back(f.get());  // assembled in input order
    return rows;
}

int cmd_sweep(const RunConfig& config, const std::string& axis,
              const std::vector<std::string>& values, std::ostream& out, std::ostream& err,
              bool strict) {
    const auto rows = sweep_rows(config, axis, values);

    if (config.format == "json") {
        ordered_json doc = ordered_json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            ordered_json entry = ordered_json::object();
            entry["axis_" + axis] = values[i];
            for (const auto& [key, value] : rows[i]) entry[key] = value;
            doc.push_back(std::move(entry));
        }
        out << doc.dump(2) << '\n';
    } else {
        out << "axis_" << axis;
        for (const auto& [key, value] : rows.front()) out << ',' << key;
        out << '\n';
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out << csv_escape(values[i]);
            for (const auto& [key, value] : rows[i]) out << ',' << format_double(value);
            out << '\n';
        }
    }
    (void)err;
    (void)strict;
    return 0;
}

ScenarioRun run_scenario(const RunConfig& config) {
    const DesignPoint p = design_point(config);
    const double hbar = constants().hbar;

    ScenarioRun run;
    run.model = scenario_model(config);
    run.coupling = p.g;

    run.t_max = config.t_max;
    if (run.t_max <= 0.0) {
        if (config.scenario == "vacuum_rabi") {
            run.t_max = kTwoPi * hbar / p.g;  // two full population oscillations
        } else if (config.scenario == "state_transfer") {
            run.t_max = kPi * hbar / (2.0 * p.g);  // one atom -> mode hand-off
        } else {
            run.t_max = 2.0 * kPi * hbar / (std::sqrt(2.0) * p.g);  // two exchange windows
        }
    }

    std::vector<double> times;
    times.reserve(static_cast<std::size_t>(std::max(0, config.samples)) + 1);
    if (config.samples > 0) {
        for (int i = 0; i <= config.samples; ++i) {
            times.push_back(run.t_max * static_cast<double>(i) / config.samples);
        }
    }

    dynamics::SolverOptions options;
    options.rel_tol = config.rel_tol;
    options.abs_tol = config.abs_tol;

    const unsigned initial_bits = 1u;  // first atom excited in every scenario
    const dynamics::QuantumState initial = dynamics::QuantumState::product(
        run.model.atom_count, run.model.fock_cutoff, initial_bits, 0);

    if (!times.empty()) {
        run.series = dynamics::sample_observables(run.model, initial, times, {}, options);
    } else {
        // Header columns still need the observable names.
        run.series = dynamics::sample_observables(run.model, initial, {0.0}, {}, options);
        run.series.times.clear();
        for (auto& column : run.series.values) column.clear();
    }
    return run;
}

int cmd_simulate(const RunConfig& config, std::ostream& out, std::ostream& err, bool strict) {
    const DesignPoint p = design_point(config);
    emit_warnings(config, p, err);

    ScenarioRun run;
    try {
        run = run_scenario(config);
    } catch (const dynamics::TruncationError& e) {
        err << "error: " << e.what() << '\n';
        err << "raise simulation.fock_cutoff (or shorten the run) and retry\n";
        return 3;
    }
    const dynamics::SystemModel& model = run.model;
    const dynamics::TimeSeries& series = run.series;
    const double hbar = constants().hbar;
    const double g = run.coupling;
    const double t_max = run.t_max;

    if (config.format == "json") {
        ordered_json doc = ordered_json::object();
        doc["scenario"] = config.scenario;
        doc["coupling_g_MHz"] = g / hbar / kTwoPi / 1e6;
        doc["kappa_kHz"] = model.kappa / kTwoPi / 1e3;
        doc["t_max_us"] = t_max * 1e6;
        doc["time_us"] = ordered_json::array();
        for (double t : series.times) doc["time_us"].push_back(t * 1e6);
        ordered_json obs = ordered_json::object();
        for (std::size_t i = 0; i < series.names.size(); ++i) obs[series.names[i]] = series.values[i];
        doc["observables"] = std::move(obs);
        out << doc.dump(2) << '\n';
    } else {
        out << "# scenario=" << config.scenario << " coupling_g_MHz="
            << format_double(g / hbar / kTwoPi / 1e6) << " kappa_kHz="
            << format_double(model.kappa / kTwoPi / 1e3) << " t_max_us="
            << format_double(t_max * 1e6) << '\n';
        out << "time_us";
        for (const auto& name : series.names) out << ',' << name;
        out << '\n';
        for (std::size_t row = 0; row < series.times.size(); ++row) {
            out << format_double(series.times[row] * 1e6);
            for (const auto& column : series.values) out << ',' << format_double(column[row]);
            out << '\n';
        }
    }

    if (strict && model.rwa_questionable()) {
        err << "error: excitation-conserving model invalid under --strict\n";
        return 3;
    }
    return 0;
}

void print_constants(std::ostream& out) {
    const Constants& c = constants();
    out << "electron_charge_esu=" << format_double(c.electron_charge) << '\n'
        << "bohr_radius_cm=" << format_double(c.bohr_radius) << '\n'
        << "hbar_erg_s=" << format_double(c.hbar) << '\n'
        << "boltzmann_erg_per_K=" << format_double(c.boltzmann) << '\n'
        << "fine_structure=" << format_double(c.fine_structure) << '\n'
        << "speed_of_light_cm_per_s=" << format_double(c.speed_of_light) << '\n'
        << "rubidium_mass_g=" << format_double(c.rubidium_mass) << '\n'
        << "rydberg_energy_erg=" << format_double(rydberg_energy()) << '\n';
}

}  // namespace rydline::app
