#include "rydline/resonator.hpp"

#include <cmath>
#include <stdexcept>

#include "rydline/constants.hpp"

namespace rydline::resonator {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Contact-loss anchor: a 0.1 Ohm normal-metal joint caps Q at 1e7.
// 0.1 Ohm in Gaussian units is 0.1 * 1e9 / c^2 s/cm.
double contact_anchor_resistance() {
    const double c = constants().speed_of_light;
    return 0.1 * 1e9 / (c * c);
}

}  // namespace

double mode_frequency(int n, double velocity, double wire_length) {
    if (n < 1) throw std::domain_error("mode index must be >= 1");
    if (velocity <= 0.0) throw std::domain_error("phase velocity must be positive");
    if (wire_length <= 0.0) throw std::domain_error("wire length must be positive");
    // n scales the rounded fundamental so the harmonic ladder is exact.
    return static_cast<double>(n) * (kPi * velocity / wire_length);
}

double effective_mass(int n, const electrostatics::Geometry& geom, double velocity) {
    geom.validate();
    const double omega = mode_frequency(n, velocity, geom.wire_length);
    const double cd = electrostatics::disc_capacitance(geom.disc_radius);
    const double cw = electrostatics::wire_capacitance(geom.wire_length, geom.log_coax_ratio);
    return cw / (2.0 * cd * cd * omega * omega);
}

ModeSpec ModeSpec::from_geometry(int n, const electrostatics::Geometry& geom, double velocity,
                                 double q_factor) {
    ModeSpec spec;
    spec.index = n;
    spec.phase_velocity = velocity;
    spec.frequency = mode_frequency(n, velocity, geom.wire_length);
    spec.effective_mass = rydline::resonator::effective_mass(n, geom, velocity);
    spec.zero_point_charge =
        std::sqrt(constants().hbar / (2.0 * spec.effective_mass * spec.frequency));
    spec.decay_rate = q_factor > 0.0 ? cavity_decay(spec.frequency, q_factor) : 0.0;
    return spec;
}

double coupling_g(double dipole_z, double omega, double atom_height, double wire_length) {
    if (omega <= 0.0) throw std::domain_error("mode frequency must be positive");
    if (atom_height <= 0.0) throw std::domain_error("atom height must be positive");
    if (wire_length <= 0.0) throw std::domain_error("wire length must be positive");
    const double hbar = constants().hbar;
    return dipole_z *
           std::sqrt(2.0 * hbar * omega / (kPi * kPi * atom_height * atom_height * wire_length));
}

double coupling_g_dimensionless(int principal_n, int mode_n, double velocity, double atom_height,
                                double omega) {
    if (principal_n < 2) throw std::domain_error("principal quantum number must be >= 2");
    if (mode_n < 1) throw std::domain_error("mode index must be >= 1");
    const Constants& k = constants();
    const double alpha = k.fine_structure;
    const double nn = static_cast<double>(principal_n);
    // sqrt(v0/v) with v0 = c: slower lines shorten at fixed omega and focus
    // the zero-point field, raising g.
    const double v_ratio = std::sqrt(k.speed_of_light / velocity);
    const double cube = 3.0 * kPi;
    return k.hbar * omega *
           std::sqrt(2.0 * alpha / (cube * cube * cube * static_cast<double>(mode_n))) * v_ratio *
           nn * nn * k.bohr_radius / atom_height;
}

double mode_volume(double atom_height, double wire_length) {
    if (atom_height <= 0.0) throw std::domain_error("atom height must be positive");
    if (wire_length <= 0.0) throw std::domain_error("wire length must be positive");
    return kPi * kPi * kPi * atom_height * atom_height * wire_length;
}

double cavity_decay(double omega, double q_factor) {
    if (q_factor <= 0.0) throw std::domain_error("quality factor must be positive");
    if (omega <= 0.0) throw std::domain_error("mode frequency must be positive");
    return omega / q_factor;
}

QBudget q_budget(const electrostatics::Geometry& geom, double contact_resistance,
                 const std::vector<std::pair<std::string, double>>& external_caps) {
    geom.validate();
    if (geom.pillar_height >= geom.wire_length) {
        throw std::domain_error(
            "radiative Q model needs pillars much shorter than the wire (H < L)");
    }
    if (contact_resistance < 0.0) throw std::domain_error("contact resistance must be >= 0");

    QBudget budget;
    const double ratio = geom.wire_length / geom.pillar_height;
    budget.q_radiative = ratio * ratio * ratio * ratio;
    // 1/R scaling anchored at 0.1 Ohm -> 1e7; R = 0 means a superconducting
    // joint, which removes the channel entirely.
    budget.q_contact = contact_resistance > 0.0
                           ? 1e7 * contact_anchor_resistance() / contact_resistance
                           : 0.0;
    budget.external = external_caps;

    double inv_total = 1.0 / budget.q_radiative + 1.0 / budget.q_endcap;
    if (budget.q_contact > 0.0) inv_total += 1.0 / budget.q_contact;
    for (const auto& [label, q] : external_caps) {
        if (q <= 0.0) throw std::domain_error("external Q cap '" + label + "' must be positive");
        inv_total += 1.0 / q;
    }
    budget.q_total = 1.0 / inv_total;
    return budget;
}

double thermal_voltage(double temperature, double wire_cap) {
    if (temperature < 0.0) throw std::domain_error("temperature must be >= 0");
    if (wire_cap <= 0.0) throw std::domain_error("wire capacitance must be positive");
    return std::sqrt(constants().boltzmann * temperature / wire_cap);
}

}  // namespace rydline::resonator
