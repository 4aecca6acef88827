#pragma once

namespace rydline {

/// Physical constants in Gaussian-CGS units (CODATA 2018 where measured).
///
/// Everything inside the library is Gaussian-CGS: lengths in cm, energies in
/// erg, charges in esu, capacitances in cm, fields in statV/cm. Laboratory
/// units exist only at the I/O boundary (see units.hpp).
struct Constants {
    double electron_charge;  ///< e, esu
    double bohr_radius;      ///< a0, cm
    double hbar;             ///< reduced Planck constant, erg s
    double boltzmann;        ///< k_B, erg/K
    double fine_structure;   ///< e^2/(hbar c), dimensionless
    double speed_of_light;   ///< v0, cm/s
    double rubidium_mass;    ///< 87Rb atomic mass, g
};

/// The build-time constant set, printed verbatim by `rydline --constants`.
///
/// fine_structure is evaluated from (electron_charge, hbar, speed_of_light)
/// so that algebraically equivalent coupling expressions agree to machine
/// precision; the result matches the measured value to ~7e-11 relative.
const Constants& constants() noexcept;

/// Rydberg energy e^2/(2 a0), erg.
double rydberg_energy() noexcept;

}  // namespace rydline
