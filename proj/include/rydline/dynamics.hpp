#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rydline::dynamics {

/// Thrown when population piles up in the top retained Fock level, meaning
/// the cutoff clipped the physics rather than the tail.
class TruncationError : public std::runtime_error {
  public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Two-level atoms exchanging one excitation with a single truncated
/// oscillator mode, in the frame rotating at the mode frequency:
///   H = sum_j [ hbar Delta_j s+_j s-_j + g_j (s+_j a + s-_j a^dag) ]
/// All rates are angular (rad/s); couplings are energies (erg).
struct SystemModel {
    int atom_count = 1;
    std::vector<double> couplings;   ///< g_j, erg
    std::vector<double> detunings;   ///< Delta_j, rad/s
    int fock_cutoff = 8;             ///< retained oscillator levels 0..fock_cutoff-1
    double kappa = 0.0;              ///< cavity decay, rad/s
    double gamma_decay = 0.0;        ///< atomic decay, rad/s
    double gamma_phi = 0.0;          ///< atomic pure dephasing, rad/s
    double mode_frequency = 0.0;     ///< rad/s; only used to judge the rotating frame

    int dim() const;
    void validate() const;
    /// True when any g/(hbar omega) exceeds 1e-2, i.e. the counter-rotating
    /// terms dropped by the rotating-wave form start to matter.
    bool rwa_questionable() const;
};

/// Density matrix on the (atoms (x) oscillator) product space. Basis index
/// runs atom A slowest, then atom B, ..., Fock level fastest.
struct QuantumState {
    Eigen::MatrixXcd rho;
    int atom_count = 1;
    int fock_cutoff = 8;

    int dim() const { return static_cast<int>(rho.rows()); }
    /// Hermiticity, unit trace, positivity (within solver slop).
    void validate() const;

    /// |excited...excited, photons> style product state, all atoms in the
    /// given bit pattern (bit j set = atom j excited), oscillator in |n>.
    static QuantumState product(int atom_count, int fock_cutoff, unsigned atom_bits, int photons);
};

/// Sampled expectation values over a time grid, keyed by observable name.
struct TimeSeries {
    std::vector<double> times;  ///< s
    std::vector<std::string> names;
    std::vector<std::vector<double>> values;  ///< values[i] is the series for names[i]

    const std::vector<double>& series(const std::string& name) const;
};

Eigen::MatrixXcd build_hamiltonian(const SystemModel& model);
Eigen::MatrixXcd annihilation_operator(const SystemModel& model);
Eigen::MatrixXcd lowering_operator(const SystemModel& model, int atom);
Eigen::MatrixXcd sigma_z_operator(const SystemModel& model, int atom);
Eigen::MatrixXcd number_operator(const SystemModel& model);
Eigen::MatrixXcd excited_projector(const SystemModel& model, int atom);

struct SolverOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    /// Population allowed in the top retained Fock level before the run is
    /// declared truncated.
    double truncation_guard = 1e-6;
};

/// Closed-system evolution by eigendecomposition of H (exact up to the
/// dense solve). Returns the state at each requested time.
std::vector<QuantumState> evolve_unitary(const SystemModel& model, const QuantumState& initial,
                                         const std::vector<double>& times,
                                         const SolverOptions& options = {});

/// Open-system evolution of
///   drho/dt = -(i/hbar)[H, rho] + kappa D[a] + sum_j (gamma_decay D[s-_j]
///             + gamma_phi/2 D[sz_j])
/// with D[L]rho = L rho L^dag - {L^dag L, rho}/2, by adaptive
/// dense-output integration.
std::vector<QuantumState> evolve_lindblad(const SystemModel& model, const QuantumState& initial,
                                          const std::vector<double>& times,
                                          const SolverOptions& options = {});

/// Convenience: evolve (Lindblad when any rate is nonzero, else unitary)
/// and sample the standard observables. Extra observables may be appended
/// as (name, hermitian matrix) pairs.
TimeSeries sample_observables(
    const SystemModel& model, const QuantumState& initial, const std::vector<double>& times,
    const std::vector<std::pair<std::string, Eigen::MatrixXcd>>& extra = {},
    const SolverOptions& options = {});

/// Entanglement of the two-atom reduced state by the spin-pair concurrence.
/// Requires atom_count == 2.
double concurrence(const QuantumState& state);

struct TransferResult {
    double transfer_time = 0.0;  ///< s
    double fidelity = 0.0;       ///< population arriving on the target atom
};

/// Sends one excitation from atom A to atom B through the wire and reports
/// when the hand-off peaks. Lossless systems use the exact spectrum; lossy
/// ones sample and refine around the first maximum.
TransferResult two_atom_transfer(const SystemModel& model, const SolverOptions& options = {});

}  // namespace rydline::dynamics
