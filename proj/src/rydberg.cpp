#include "rydline/rydberg.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rydline/constants.hpp"

namespace rydline::rydberg {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

double dipole_matrix_element(int principal_n) {
    if (principal_n < 2) throw std::domain_error("principal quantum number must be >= 2");
    const Constants& k = constants();
    const double nn = static_cast<double>(principal_n);
    return k.electron_charge * nn * nn * k.bohr_radius / (3.0 * std::sqrt(3.0));
}

double transition_frequency(int principal_n) {
    if (principal_n < 2) throw std::domain_error("principal quantum number must be >= 2");
    const double nn = static_cast<double>(principal_n);
    const double below = nn - 1.0;
    return rydberg_energy() / constants().hbar * (1.0 / (below * below) - 1.0 / (nn * nn));
}

double mean_square_radius(int principal_n, int angular_l) {
    if (principal_n < 1) throw std::domain_error("principal quantum number must be >= 1");
    if (angular_l < 0 || angular_l >= principal_n) {
        throw std::domain_error("angular momentum must satisfy 0 <= l < N");
    }
    const double nn = static_cast<double>(principal_n);
    const double ll = static_cast<double>(angular_l);
    const double a0 = constants().bohr_radius;
    return nn * nn * a0 * a0 / 2.0 * (5.0 * nn * nn + 1.0 - 3.0 * ll * (ll + 1.0));
}

double vdw_shift(int principal_n, int angular_l, double atom_height) {
    if (atom_height <= 0.0) throw std::domain_error("atom height must be positive");
    const double r2 = mean_square_radius(principal_n, angular_l);
    const double e = constants().electron_charge;
    const double h3 = atom_height * atom_height * atom_height;
    return -(4.0 / 3.0) * e * e * r2 / (16.0 * h3);
}

double max_force(double vdw_energy, double coupling_g, double atom_height) {
    if (atom_height <= 0.0) throw std::domain_error("atom height must be positive");
    return (3.0 * std::abs(vdw_energy) + std::abs(coupling_g)) / atom_height;
}

ExcitationProbability motional_excitation(double force, double interaction_time,
                                          const AtomSpec& atom) {
    if (atom.trap_frequency <= 0.0) throw std::domain_error("trap frequency must be positive");
    if (atom.species_mass <= 0.0) throw std::domain_error("atom mass must be positive");
    if (interaction_time < 0.0) throw std::domain_error("interaction time must be >= 0");
    ExcitationProbability p;
    const double t2 = interaction_time * interaction_time;
    p.force_term =
        force * force * t2 / (2.0 * constants().hbar * atom.species_mass * atom.trap_frequency);
    p.trap_term = atom.trap_frequency * atom.trap_frequency * t2 / 8.0;
    return p;
}

double linear_stark_shift(int principal_n, int parabolic_k, double field) {
    if (principal_n < 1) throw std::domain_error("principal quantum number must be >= 1");
    if (std::abs(parabolic_k) > principal_n - 1) {
        throw std::domain_error("parabolic quantum number must satisfy |k| <= N-1");
    }
    const Constants& c = constants();
    return 1.5 * static_cast<double>(principal_n) * static_cast<double>(parabolic_k) *
           c.electron_charge * c.bohr_radius * field;
}

const BudgetItem* BudgetReport::find(const std::string& key) const {
    for (const auto& item : items) {
        if (item.key == key) return &item;
    }
    return nullptr;
}

BudgetReport decoherence_budget(const AtomSpec& atom, const SurfaceEnvironment& env,
                                const electrostatics::Geometry& geom,
                                const resonator::ModeSpec& mode, double coupling_g,
                                double temperature, double atomic_dephasing,
                                int stark_k, double interaction_time) {
    geom.validate();
    if (env.atom_height <= 0.0) throw std::domain_error("atom height must be positive");
    if (coupling_g <= 0.0) throw std::domain_error("coupling must be positive");
    const Constants& c = constants();
    const double h = env.atom_height;
    const int n = atom.principal_n;

    BudgetReport report;
    auto add = [&report](std::string key, double value, std::string unit, std::string note) {
        report.items.push_back({std::move(key), value, std::move(unit), std::move(note)});
    };

    const double g_rate = coupling_g / c.hbar;  // rad/s
    add("coupling_g_MHz", g_rate / kTwoPi / 1e6, "MHz",
        "coherent atom-wire exchange rate; everything below must stay slower");

    add("cavity_decay_kHz", mode.decay_rate / kTwoPi / 1e3, "kHz",
        "photon loss kappa = omega/Q of the wire mode");

    add("atomic_dephasing_kHz", atomic_dephasing / kTwoPi / 1e3, "kHz",
        "level-shift noise on the Rydberg pair, an experiment input");

    const double coop = mode.decay_rate > 0.0 && atomic_dephasing > 0.0
                            ? g_rate * g_rate / (mode.decay_rate * atomic_dephasing)
                            : std::numeric_limits<double>::infinity();
    add("cooperativity", coop, "", "g^2/(hbar^2 kappa gamma); exchange needs >> 1");

    const double vdw = vdw_shift(n, 1, h);
    add("vdw_shift_MHz", vdw / c.hbar / kTwoPi / 1e6, "MHz",
        "image-charge level shift at the working height; sets the gradient scale");

    const double force = max_force(vdw, coupling_g, h);
    add("max_force_dyn", force, "dyn",
        "magnitude bound (3|dE|+|g|)/h on the level gradient during the exchange");

    const double t_int = interaction_time > 0.0 ? interaction_time : kPi * c.hbar / coupling_g;
    add("interaction_time_us", t_int * 1e6, "us", "exchange time pi hbar/g unless overridden");

    const ExcitationProbability p = motional_excitation(force, t_int, atom);
    add("motional_excitation", p.total(), "",
        "probability of leaving the trap ground state during the exchange");
    add("motional_force_term", p.force_term, "", "displacement part, F^2 t^2 / (2 hbar M nu)");
    add("motional_trap_term", p.trap_term, "", "trap phase-spread part, nu^2 t^2 / 8");

    const int k_offset = stark_k >= 0 ? stark_k : n - 1;
    const double stray_field =
        env.stray_island_radius > 0.0 && env.stray_island_distance > 0.0
            ? electrostatics::field_on_axis(c.electron_charge, env.stray_island_radius,
                                            env.stray_island_distance)
            : 0.0;
    const double stark = linear_stark_shift(n, k_offset, stray_field);
    add("stark_single_electron_MHz", stark / c.hbar / kTwoPi / 1e6, "MHz",
        "level shift from one stray electron on a nearby island (0 when no island is set)");

    add("patch_shift_MHz", env.patch_shift / kTwoPi / 1e6, "MHz",
        "measured patch-potential shift at the working height, passed through");

    const double cw = electrostatics::wire_capacitance(geom.wire_length, geom.log_coax_ratio);
    const double v_rms = resonator::thermal_voltage(temperature, cw);
    add("thermal_voltage_uV", v_rms * 299.792458 * 1e6, "uV",
        "RMS Johnson voltage on the wire at the operating temperature");

    return report;
}

}  // namespace rydline::rydberg
