#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rydline/electrostatics.hpp"

namespace rydline::resonator {

/// One quantized standing-wave mode of the finite transmission line.
struct ModeSpec {
    int index = 1;                 ///< n
    double frequency = 0.0;        ///< omega_n = n pi v / L, rad/s
    double effective_mass = 0.0;   ///< m_n = C_w / (2 C_d^2 omega_n^2), erg s^2/esu^2
    double zero_point_charge = 0;  ///< q_zp = sqrt(hbar / (2 m_n omega_n)), esu
    double decay_rate = 0.0;       ///< kappa = omega/Q, rad/s
    double phase_velocity = 0.0;   ///< v, cm/s

    /// Builds the full mode record for a geometry; q_factor <= 0 means lossless.
    static ModeSpec from_geometry(int n, const electrostatics::Geometry& geom, double velocity,
                                  double q_factor);
};

/// omega_n = n pi v / L. n < 1 throws std::domain_error.
double mode_frequency(int n, double velocity, double wire_length);

/// Effective oscillator mass of mode n, C_w / (2 C_d^2 omega_n^2).
double effective_mass(int n, const electrostatics::Geometry& geom, double velocity);

/// Atom-mode coupling at the long-wire optimum R = h:
/// g = d_z sqrt(2 hbar omega / (pi^2 h^2 L)), erg.
double coupling_g(double dipole_z, double omega, double atom_height, double wire_length);

/// Same coupling written with the fine structure constant:
/// g = hbar omega sqrt(2 alpha / ((3 pi)^3 n)) sqrt(v0/v) N^2 a0 / h.
/// Equals coupling_g with d_z(N) and L = n pi v / omega.
double coupling_g_dimensionless(int principal_n, int mode_n, double velocity, double atom_height,
                                double omega);

/// Effective cavity-QED mode volume V = pi^3 h^2 L, cm^3, defined so that
/// g = d sqrt(2 pi hbar omega / V).
double mode_volume(double atom_height, double wire_length);

/// kappa = omega/Q. Q <= 0 throws std::domain_error.
double cavity_decay(double omega, double q_factor);

/// Loss budget of the resonator. Contributions combine harmonically,
/// 1/Q_total = sum of 1/Q_i over the finite entries.
struct QBudget {
    double q_radiative = 0.0;  ///< (L/H)^4, pillar radiation
    double q_contact = 0.0;    ///< normal-metal contact resistance, 1e7 at 0.1 Ohm, ~1/R
    double q_endcap = 1e8;     ///< gold end caps, fixed floor
    std::vector<std::pair<std::string, double>> external;  ///< user-supplied (label, Q)
    double q_total = 0.0;
};

/// contact_resistance in Gaussian units (s/cm); zero disables that channel.
/// Pillars taller than the wire (H >= L) invalidate the radiative model and
/// throw std::domain_error.
QBudget q_budget(const electrostatics::Geometry& geom, double contact_resistance,
                 const std::vector<std::pair<std::string, double>>& external_caps = {});

/// RMS thermal voltage fluctuation of the wire, sqrt(k_B T / C_w), statV.
double thermal_voltage(double temperature, double wire_cap);

}  // namespace rydline::resonator
