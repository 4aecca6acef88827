#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "rydline/app.hpp"
#include "rydline/constants.hpp"
#include "rydline/dynamics.hpp"
#include "rydline/electrostatics.hpp"
#include "rydline/resonator.hpp"
#include "rydline/rydberg.hpp"
#include "rydline/units.hpp"

namespace py = pybind11;

namespace {

using rydline::app::RunConfig;

RunConfig make_config(const std::string& config_json,
                      const std::vector<std::string>& overrides) {
    RunConfig config = rydline::app::load_config(config_json, "config");
    for (const auto& assignment : overrides) rydline::app::apply_override(config, assignment);
    return config;
}

py::dict rows_to_dict(const std::vector<std::pair<std::string, double>>& rows) {
    py::dict out;
    for (const auto& [key, value] : rows) out[py::str(key)] = value;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rydberg-atom / transmission-line cavity QED design toolkit";
    m.attr("__version__") = rydline::app::kVersion;

    py::register_exception<rydline::app::ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<rydline::dynamics::TruncationError>(m, "TruncationError",
                                                               PyExc_RuntimeError);

    m.def("constants", [] {
        const rydline::Constants& c = rydline::constants();
        py::dict out;
        out["electron_charge_esu"] = c.electron_charge;
        out["bohr_radius_cm"] = c.bohr_radius;
        out["hbar_erg_s"] = c.hbar;
        out["boltzmann_erg_per_K"] = c.boltzmann;
        out["fine_structure"] = c.fine_structure;
        out["speed_of_light_cm_per_s"] = c.speed_of_light;
        out["rubidium_mass_g"] = c.rubidium_mass;
        out["rydberg_energy_erg"] = rydline::rydberg_energy();
        return out;
    }, "Physical constants in Gaussian-CGS units.");

    m.def("parse_quantity", [](const std::string& text) {
        const rydline::units::Quantity q = rydline::units::parse_quantity(text);
        return py::make_tuple(q.value(), std::string(rydline::units::dimension_name(q.dimension())));
    }, py::arg("text"),
       "Parse a lab-unit string like '10 um'; returns (Gaussian-CGS value, dimension).");

    // Geometry is the one structured argument the low-level functions share.
    py::class_<rydline::electrostatics::Geometry>(m, "Geometry",
            "Transmission-line layout, lengths in cm.")
        .def(py::init<>())
        .def_readwrite("disc_radius", &rydline::electrostatics::Geometry::disc_radius)
        .def_readwrite("atom_height", &rydline::electrostatics::Geometry::atom_height)
        .def_readwrite("wire_length", &rydline::electrostatics::Geometry::wire_length)
        .def_readwrite("log_coax_ratio", &rydline::electrostatics::Geometry::log_coax_ratio)
        .def_readwrite("pillar_height", &rydline::electrostatics::Geometry::pillar_height)
        .def("long_wire_limit_ok", &rydline::electrostatics::Geometry::long_wire_limit_ok)
        .def("validate", &rydline::electrostatics::Geometry::validate);

    m.def("disc_capacitance", &rydline::electrostatics::disc_capacitance, py::arg("disc_radius"),
          "Isolated-disc capacitance 2R/pi, cm.");
    m.def("wire_capacitance", &rydline::electrostatics::wire_capacitance, py::arg("wire_length"),
          py::arg("log_coax_ratio"), "Coax estimate L/(2 ln(b/a)), cm.");
    m.def("field_on_axis", &rydline::electrostatics::field_on_axis, py::arg("charge"),
          py::arg("disc_radius"), py::arg("axial_distance"),
          "On-axis disc field q/(R^2 + z^2), statV/cm.");
    m.def("coupling_coefficient_full", &rydline::electrostatics::coupling_coefficient_full,
          py::arg("geometry"), "Wire-mediated dipole-dipole coefficient, erg/(esu cm)^2.");
    m.def("coupling_coefficient_simple", &rydline::electrostatics::coupling_coefficient_simple,
          py::arg("atom_height"), py::arg("wire_length"),
          "Long-wire optimum (2/pi^2)/(h^2 L), erg/(esu cm)^2.");
    m.def("free_space_coupling", &rydline::electrostatics::free_space_coupling,
          py::arg("separation"), "Free-space comparator 1/L^3, erg/(esu cm)^2.");
    m.def("equilibrium_charges", [](double dipole_a, double dipole_b,
                                    const rydline::electrostatics::Geometry& geom) {
        const auto q = rydline::electrostatics::equilibrium_charges(dipole_a, dipole_b, geom);
        return py::make_tuple(q.q_a, q.q_b);
    }, py::arg("dipole_a"), py::arg("dipole_b"), py::arg("geometry"),
       "Energy-minimizing disc charges (q_a, q_b), esu.");

    m.def("mode_frequency", &rydline::resonator::mode_frequency, py::arg("n"), py::arg("velocity"),
          py::arg("wire_length"), "Standing-wave frequency n pi v / L, rad/s.");
    m.def("effective_mass", &rydline::resonator::effective_mass, py::arg("n"), py::arg("geometry"),
          py::arg("velocity"), "Mode oscillator mass C_w/(2 C_d^2 omega_n^2).");
    m.def("coupling_g", &rydline::resonator::coupling_g, py::arg("dipole_z"), py::arg("omega"),
          py::arg("atom_height"), py::arg("wire_length"),
          "Atom-mode coupling d_z sqrt(2 hbar omega / (pi^2 h^2 L)), erg.");
    m.def("coupling_g_dimensionless", &rydline::resonator::coupling_g_dimensionless,
          py::arg("principal_n"), py::arg("mode_n"), py::arg("velocity"), py::arg("atom_height"),
          py::arg("omega"), "Fine-structure form of the coupling, erg.");
    m.def("mode_volume", &rydline::resonator::mode_volume, py::arg("atom_height"),
          py::arg("wire_length"), "Effective mode volume pi^3 h^2 L, cm^3.");
    m.def("cavity_decay", &rydline::resonator::cavity_decay, py::arg("omega"), py::arg("q_factor"),
          "kappa = omega/Q, rad/s.");
    m.def("thermal_voltage", &rydline::resonator::thermal_voltage, py::arg("temperature"),
          py::arg("wire_capacitance"), "RMS thermal voltage sqrt(k_B T / C_w), statV.");
    m.def("q_budget", [](const rydline::electrostatics::Geometry& geom, double contact_resistance,
                         const std::vector<std::pair<std::string, double>>& external) {
        const auto budget = rydline::resonator::q_budget(geom, contact_resistance, external);
        py::dict out;
        out["q_radiative"] = budget.q_radiative;
        out["q_contact"] = budget.q_contact;
        out["q_endcap"] = budget.q_endcap;
        for (const auto& [label, q] : budget.external) out[py::str("q_" + label)] = q;
        out["q_total"] = budget.q_total;
        return out;
    }, py::arg("geometry"), py::arg("contact_resistance") = 0.0,
       py::arg("external") = std::vector<std::pair<std::string, double>>{},
       "Loss budget; contributions combine harmonically into q_total.");

    m.def("dipole_matrix_element", &rydline::rydberg::dipole_matrix_element,
          py::arg("principal_n"), "Circular-state dipole e N^2 a0 / (3 sqrt(3)), esu cm.");
    m.def("transition_frequency", &rydline::rydberg::transition_frequency, py::arg("principal_n"),
          "Hydrogenic N-1 <-> N angular frequency, rad/s.");
    m.def("mean_square_radius", &rydline::rydberg::mean_square_radius, py::arg("principal_n"),
          py::arg("angular_l"), "<r^2> of the (N, l) level, cm^2.");
    m.def("vdw_shift", &rydline::rydberg::vdw_shift, py::arg("principal_n"), py::arg("angular_l"),
          py::arg("atom_height"), "Image-interaction van der Waals shift, erg.");
    m.def("max_force", &rydline::rydberg::max_force, py::arg("vdw_energy"), py::arg("coupling_g"),
          py::arg("atom_height"), "Steepest level-gradient force (3|dE| + |g|)/h, dyn.");
    m.def("motional_excitation", [](double force, double interaction_time, double species_mass,
                                    double trap_frequency) {
        rydline::rydberg::AtomSpec atom;
        atom.species_mass = species_mass;
        atom.trap_frequency = trap_frequency;
        const auto p = rydline::rydberg::motional_excitation(force, interaction_time, atom);
        py::dict out;
        out["force_term"] = p.force_term;
        out["trap_term"] = p.trap_term;
        out["total"] = p.total();
        return out;
    }, py::arg("force"), py::arg("interaction_time"),
       py::arg("species_mass") = rydline::constants().rubidium_mass,
       py::arg("trap_frequency") = 0.0,
       "Trap-excitation probability terms for a gate of the given duration.");
    m.def("linear_stark_shift", &rydline::rydberg::linear_stark_shift, py::arg("principal_n"),
          py::arg("parabolic_k"), py::arg("field"), "Linear Stark shift (3/2) N k e a0 E, erg.");

    m.def("sweepable_fields", &rydline::app::sweepable_fields,
          "Dotted configuration paths accepted as overrides and sweep axes.");

    m.def("run_estimate", [](const std::string& config_json,
                             const std::vector<std::string>& overrides) {
        return rows_to_dict(rydline::app::estimate_rows(make_config(config_json, overrides)));
    }, py::arg("config_json") = std::string(), py::arg("overrides") = std::vector<std::string>{},
       "Single-point design table as a dict keyed with explicit units.");

    m.def("run_budget", [](const std::string& config_json,
                           const std::vector<std::string>& overrides) {
        return rows_to_dict(rydline::app::budget_rows(make_config(config_json, overrides)));
    }, py::arg("config_json") = std::string(), py::arg("overrides") = std::vector<std::string>{},
       "Decoherence budget plus the cavity-Q breakdown as a dict.");

    m.def("run_sweep", [](const std::string& axis, const std::vector<std::string>& values,
                          const std::string& config_json,
                          const std::vector<std::string>& overrides) {
        const RunConfig config = make_config(config_json, overrides);
        py::list out;
        for (const auto& rows : rydline::app::sweep_rows(config, axis, values))
            out.append(rows_to_dict(rows));
        return out;
    }, py::arg("axis"), py::arg("values"), py::arg("config_json") = std::string(),
       py::arg("overrides") = std::vector<std::string>{},
       "run_estimate + run_budget rows for each axis value, in input order.");

    m.def("run_simulate", [](const std::string& config_json,
                             const std::vector<std::string>& overrides) {
        const RunConfig config = make_config(config_json, overrides);
        const rydline::app::ScenarioRun run = rydline::app::run_scenario(config);
        const double hbar = rydline::constants().hbar;
        const double two_pi = 6.283185307179586476925286766559;
        py::dict out;
        out["scenario"] = config.scenario;
        out["coupling_g_MHz"] = run.coupling / hbar / two_pi / 1e6;
        out["kappa_kHz"] = run.model.kappa / two_pi / 1e3;
        out["t_max_us"] = run.t_max * 1e6;
        std::vector<double> times_us;
        times_us.reserve(run.series.times.size());
        for (double t : run.series.times) times_us.push_back(t * 1e6);
        out["time_us"] = times_us;
        py::dict observables;
        for (std::size_t i = 0; i < run.series.names.size(); ++i)
            observables[py::str(run.series.names[i])] = run.series.values[i];
        out["observables"] = observables;
        return out;
    }, py::arg("config_json") = std::string(), py::arg("overrides") = std::vector<std::string>{},
       "Run the configured scenario; raises TruncationError when the Fock ladder clips.");
}
