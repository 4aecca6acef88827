#pragma once

#include <string>
#include <vector>

#include "rydline/constants.hpp"
#include "rydline/electrostatics.hpp"
#include "rydline/resonator.hpp"

namespace rydline::rydberg {

/// A trapped Rydberg atom. trap_frequency is the harmonic trap's angular
/// frequency (rad/s).
struct AtomSpec {
    int principal_n = 50;
    double species_mass = constants().rubidium_mass;  ///< g
    double trap_frequency = 0.0;                      ///< rad/s
};

/// Surface-induced perturbations near the chip.
struct SurfaceEnvironment {
    double atom_height = 1e-3;          ///< cm, height above the conducting plane
    double patch_shift = 0.0;           ///< rad/s, measured patch-potential level shift
    double stray_island_radius = 0.0;   ///< cm, metallic island modeled as a disc
    double stray_island_distance = 0.0; ///< cm
};

/// z dipole matrix element between adjacent circular states,
/// d_z = e N^2 a0 / (3 sqrt(3)). N < 2 throws std::domain_error.
double dipole_matrix_element(int principal_n);

/// Angular frequency of the N-1 <-> N transition, hydrogenic:
/// omega = (Ry/hbar) (1/(N-1)^2 - 1/N^2).
double transition_frequency(int principal_n);

/// <r^2> = (N^2 a0^2 / 2) (5 N^2 + 1 - 3 l (l+1)). l >= N throws.
double mean_square_radius(int principal_n, int angular_l);

/// Van der Waals shift from the image interaction with the chip surface,
/// Delta E = -(4/3) e^2 <r^2> / (16 h^3), erg (negative).
double vdw_shift(int principal_n, int angular_l, double atom_height);

/// Steepest force the atom feels while coupled: level gradients scale as
/// 1/h for both the vdW shift (3|dE|/h) and the coupling (|g|/h).
double max_force(double vdw_energy, double coupling_g, double atom_height);

/// Motional heating during a gate of duration t under force F.
struct ExcitationProbability {
    double force_term = 0.0;  ///< F^2 t^2 / (2 hbar M nu)
    double trap_term = 0.0;   ///< nu^2 t^2 / 8, trap-frequency phase spread
    double total() const { return force_term + trap_term; }
};

ExcitationProbability motional_excitation(double force, double interaction_time,
                                          const AtomSpec& atom);

/// Linear Stark shift of the single-electron level (N, parabolic k):
/// Delta E = (3/2) N k e a0 E. |k| > N-1 throws std::domain_error.
double linear_stark_shift(int principal_n, int parabolic_k, double field);

struct BudgetItem {
    std::string key;
    double value = 0.0;
    std::string unit;
    std::string note;
};

struct BudgetReport {
    std::vector<BudgetItem> items;
    const BudgetItem* find(const std::string& key) const;
};

/// Collects every rate and shift that competes with the coherent coupling g
/// for one atom at env.atom_height above the chip; geom supplies the wire
/// capacitance for the thermal-voltage line. stark_k < 0 means use the
/// largest manifold offset (N-1); interaction_time <= 0 means the exchange
/// time pi hbar / g.
BudgetReport decoherence_budget(const AtomSpec& atom, const SurfaceEnvironment& env,
                                const electrostatics::Geometry& geom,
                                const resonator::ModeSpec& mode, double coupling_g,
                                double temperature, double atomic_dephasing,
                                int stark_k = -1, double interaction_time = 0.0);

}  // namespace rydline::rydberg
