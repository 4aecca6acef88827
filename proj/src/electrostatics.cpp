#include "rydline/electrostatics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rydline::electrostatics {

namespace {
constexpr double kPi = std::numbers::pi;
}

void Geometry::validate() const {
    if (!(disc_radius > 0.0)) throw std::domain_error("disc_radius must be positive");
    if (!(atom_height > 0.0)) throw std::domain_error("atom_height must be positive");
    if (!(wire_length > 0.0)) throw std::domain_error("wire_length must be positive");
    if (!(pillar_height > 0.0)) throw std::domain_error("pillar_height must be positive");
    if (!(log_coax_ratio > 0.0)) throw std::domain_error("log_coax_ratio must be positive");
}

double disc_capacitance(double disc_radius) {
    if (disc_radius < 0.0) throw std::domain_error("disc_radius must be non-negative");
    return 2.0 * disc_radius / kPi;
}

double wire_capacitance(double wire_length, double log_coax_ratio) {
    if (wire_length < 0.0) throw std::domain_error("wire_length must be non-negative");
    if (!(log_coax_ratio > 0.0)) throw std::domain_error("log_coax_ratio must be positive");
    return wire_length / (2.0 * log_coax_ratio);
}

double field_on_axis(double charge, double disc_radius, double axial_distance) {
    const double r2 = disc_radius * disc_radius + axial_distance * axial_distance;
    if (r2 == 0.0) throw std::domain_error("field_on_axis is singular at R = z = 0");
    return charge / r2;
}

double electrostatic_energy(const ChargeState& charges, double dipole_a, double dipole_b,
                            const Geometry& geom) {
    geom.validate();
    const double c_d = disc_capacitance(geom.disc_radius);
    const double c_w = wire_capacitance(geom.wire_length, geom.log_coax_ratio);
    const double r2h2 = geom.disc_radius * geom.disc_radius + geom.atom_height * geom.atom_height;
    const double q_sum = charges.q_a + charges.q_b;
    return (charges.q_a * charges.q_a + charges.q_b * charges.q_b) / (2.0 * c_d) +
           q_sum * q_sum / (2.0 * c_w) +
           (charges.q_a * dipole_a + charges.q_b * dipole_b) / r2h2;
}

ChargeState equilibrium_charges(double dipole_a, double dipole_b, const Geometry& geom) {
    geom.validate();
    const double c_d = disc_capacitance(geom.disc_radius);
    const double c_w = wire_capacitance(geom.wire_length, geom.log_coax_ratio);
    const double r2h2 = geom.disc_radius * geom.disc_radius + geom.atom_height * geom.atom_height;

    // dH/dq_a = q_a/C_d + (q_a + q_b)/C_w + d_a/(R^2+h^2) = 0 and likewise
    // for b: a symmetric 2x2 system with diagonal u and off-diagonal w.
    const double u = 1.0 / c_d + 1.0 / c_w;
    const double w = 1.0 / c_w;
    const double det = u * u - w * w;
    const double k_a = dipole_a / r2h2;
    const double k_b = dipole_b / r2h2;
    return {-(u * k_a - w * k_b) / det, -(u * k_b - w * k_a) / det};
}

EliminatedInteraction eliminate_charges(const Geometry& geom) {
    geom.validate();
    const double c_d = disc_capacitance(geom.disc_radius);
    const double c_w = wire_capacitance(geom.wire_length, geom.log_coax_ratio);
    const double r2h2 = geom.disc_radius * geom.disc_radius + geom.atom_height * geom.atom_height;

    // H_min = -1/2 k^T M^{-1} k with M = [[u, w], [w, u]] and k_j = d_j/(R^2+h^2).
    const double u = 1.0 / c_d + 1.0 / c_w;
    const double w = 1.0 / c_w;
    const double det = u * u - w * w;
    const double scale = 1.0 / (r2h2 * r2h2);
    return {w / det * scale, -0.5 * u / det * scale};
}

double coupling_coefficient_full(const Geometry& geom) {
    geom.validate();
    const double c_d = disc_capacitance(geom.disc_radius);
    const double c_w = wire_capacitance(geom.wire_length, geom.log_coax_ratio);
    const double r2h2 = geom.disc_radius * geom.disc_radius + geom.atom_height * geom.atom_height;
    return c_d * c_d / ((c_w + 2.0 * c_d) * r2h2 * r2h2);
}

double coupling_coefficient_simple(double atom_height, double wire_length) {
    if (!(atom_height > 0.0) || !(wire_length > 0.0)) {
        throw std::domain_error("atom_height and wire_length must be positive");
    }
    return (2.0 / (kPi * kPi)) / (atom_height * atom_height * wire_length);
}

double free_space_coupling(double wire_length) {
    if (!(wire_length > 0.0)) throw std::domain_error("wire_length must be positive");
    return 1.0 / (wire_length * wire_length * wire_length);
}

}  // namespace rydline::electrostatics
