#pragma once

namespace rydline::electrostatics {

/// Physical layout of the two-disc transmission line. All lengths in cm.
struct Geometry {
    double disc_radius = 1e-3;    ///< R
    double atom_height = 1e-3;    ///< h, atom above disc center
    double wire_length = 0.3;     ///< L
    double log_coax_ratio = 1.0;  ///< ln(b/a) of the coax-cable capacitance estimate
    double pillar_height = 3e-3;  ///< H, height of the end pillars

    /// The closed forms assume a wire much longer than the discs; false
    /// when L <= 10 R, in which case callers should emit a warning.
    bool long_wire_limit_ok() const noexcept { return wire_length > 10.0 * disc_radius; }

    /// Throws std::domain_error on non-positive lengths or ln(b/a) <= 0.
    void validate() const;
};

/// Induced disc charges, esu.
struct ChargeState {
    double q_a = 0.0;
    double q_b = 0.0;
};

/// Capacitance of an isolated conducting disc, 2R/pi (Gaussian, cm).
double disc_capacitance(double disc_radius);

/// Coax-cable estimate of the wire capacitance, L/(2 ln(b/a)) (cm).
double wire_capacitance(double wire_length, double log_coax_ratio);

/// On-axis field of a charged disc, q/(R^2 + z^2), statV/cm.
/// R = z = 0 throws std::domain_error.
double field_on_axis(double charge, double disc_radius, double axial_distance);

/// Total electrostatic energy of the conductor plus both atom-field terms,
/// H(q) = (q_a^2 + q_b^2)/2C_d + (q_a + q_b)^2/2C_w
///        + q_a d_a/(R^2+h^2) + q_b d_b/(R^2+h^2),  erg.
double electrostatic_energy(const ChargeState& charges, double dipole_a, double dipole_b,
                            const Geometry& geom);

/// Charges that minimize electrostatic_energy for fixed dipoles: the
/// conductor follows the atomic dipoles adiabatically. Closed-form 2x2 solve.
ChargeState equilibrium_charges(double dipole_a, double dipole_b, const Geometry& geom);

/// Coefficients of the Hamiltonian after eliminating the charges:
/// H_min = cross * d_a d_b + self * (d_a^2 + d_b^2).
/// The cross term is the dipole-dipole coupling; the self terms shift each
/// atom individually and are reported separately.
struct EliminatedInteraction {
    double cross_coefficient;  ///< erg/(esu cm)^2
    double self_coefficient;   ///< erg/(esu cm)^2, same for both atoms
};
EliminatedInteraction eliminate_charges(const Geometry& geom);

/// Wire-mediated dipole-dipole coupling coefficient,
/// J = C_d^2 / [(C_w + 2 C_d)(R^2 + h^2)^2], so H_int = J d_a d_b.
double coupling_coefficient_full(const Geometry& geom);

/// Long-wire optimum (R = h, L >> R): J = (2/pi^2) / (h^2 L).
double coupling_coefficient_simple(double atom_height, double wire_length);

/// Free-space comparator at separation L: J = 1/L^3.
double free_space_coupling(double wire_length);

}  // namespace rydline::electrostatics
