// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit when
// anything fails. Tolerances are part of the contract and are spelled out
// next to each check.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rydline/app.hpp"
#include "rydline/constants.hpp"
#include "rydline/dynamics.hpp"
#include "rydline/electrostatics.hpp"
#include "rydline/resonator.hpp"
#include "rydline/rydberg.hpp"

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

int g_failures = 0;

void report(int index, const char* label, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << index << " " << label << ": " << detail
              << "\n";
    if (!ok) ++g_failures;
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double budget_value(const std::vector<std::pair<std::string, double>>& rows, const char* key) {
    for (const auto& [k, v] : rows) {
        if (k == key) return v;
    }
    return std::nan("");
}

}  // namespace

int main() {
    using namespace rydline;
    const Constants& k = constants();

    // 1. Coupling constant window at the flagship operating point.
    {
        const double d = rydberg::dipole_matrix_element(50);
        const double g = resonator::coupling_g(d, kTwoPi * 50e9, 1e-3, 0.3);
        const double g_mhz = g / k.hbar / kTwoPi / 1e6;
        report(1, "coupling window", g_mhz > 2.4 && g_mhz < 3.3,
               "g/2pi hbar = " + num(g_mhz) + " MHz, window [2.4, 3.3]");
    }

    // 2. Three-form coupling identity over 50 randomized consistent sets.
    {
        std::mt19937 rng(20240817);
        std::uniform_int_distribution<int> principal(10, 90);
        std::uniform_int_distribution<int> mode_n(1, 6);
        std::uniform_real_distribution<double> vel(0.2, 1.0);
        std::uniform_real_distribution<double> log_h(-4.0, -2.0);
        std::uniform_real_distribution<double> log_nu(9.0, 11.3);

        double worst = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            const int big_n = principal(rng);
            const int n = mode_n(rng);
            const double v = vel(rng) * k.speed_of_light;
            const double h = std::pow(10.0, log_h(rng));
            const double omega = kTwoPi * std::pow(10.0, log_nu(rng));
            const double length = n * kPi * v / omega;

            const double d = rydberg::dipole_matrix_element(big_n);
            const double g1 = resonator::coupling_g(d, omega, h, length);
            const double g2 = resonator::coupling_g_dimensionless(big_n, n, v, h, omega);
            const double g3 =
                d * std::sqrt(kTwoPi * k.hbar * omega / resonator::mode_volume(h, length));
            worst = std::max(worst, std::abs(g2 / g1 - 1.0));
            worst = std::max(worst, std::abs(g3 / g1 - 1.0));
        }
        report(2, "three-form identity", worst < 1e-12,
               "worst relative spread " + num(worst) + " over 50 sets, limit 1e-12");
    }

    // 3. Resonator frequencies and decay.
    {
        const double nu1 = resonator::mode_frequency(1, k.speed_of_light, 0.3) / kTwoPi;
        const bool formula_exact = std::abs(nu1 * 2.0 * 0.3 / k.speed_of_light - 1.0) < 1e-12;
        const bool near_50 = std::abs(nu1 / 50e9 - 1.0) < 1e-3;
        const double kappa = resonator::cavity_decay(kTwoPi * 50e9, 1e6);
        const bool kappa_ok = std::abs(kappa / (kTwoPi * 5e4) - 1.0) < 1e-12;
        const double nu_atom = rydberg::transition_frequency(50) / kTwoPi;
        const bool atom_ok = nu_atom >= 50e9 && nu_atom <= 58e9;
        report(3, "resonator numbers", formula_exact && near_50 && kappa_ok && atom_ok,
               "nu1 = " + num(nu1 / 1e9) + " GHz (v/2L exact, 50 GHz within 0.1%), kappa/2pi = " +
                   num(kappa / kTwoPi / 1e3) + " kHz, atom " + num(nu_atom / 1e9) + " GHz");
    }

    // 4. Full electrostatic coupling approaches the long-wire form.
    {
        const double h = 1e-3;
        bool ok = true;
        double worst_margin = 0.0;
        for (double ratio : {50.0, 100.0, 316.0, 1000.0, 3162.0, 10000.0}) {
            electrostatics::Geometry geom;
            geom.disc_radius = h;
            geom.atom_height = h;
            geom.wire_length = ratio * h;
            const double full = electrostatics::coupling_coefficient_full(geom);
            const double simple =
                electrostatics::coupling_coefficient_simple(h, geom.wire_length);
            const double dev = std::abs(full / simple - 1.0);
            const double bound = 8.0 * h / (kPi * geom.wire_length) * 1.1;
            ok = ok && dev <= bound;
            worst_margin = std::max(worst_margin, dev / bound);
        }
        report(4, "electrostatic limit", ok,
               "deviation stays within the 8h/(pi L) envelope, worst margin " +
                   num(worst_margin));
    }

    // 5. Van der Waals window.
    {
        const double shift = rydberg::vdw_shift(50, 1, 1e-3) / k.hbar / kTwoPi / 1e6;
        report(5, "van der Waals window", shift > -2.6 && shift < -0.65,
               "shift = " + num(shift) + " MHz, window [-2.6, -0.65]");
    }

    // 6. Motional heating probability of the default budget.
    {
        const app::RunConfig cfg;
        const double p = budget_value(app::budget_rows(cfg), "motional_excitation");
        report(6, "heating probability", p >= 5e-4 && p <= 2e-3,
               "P = " + num(p) + ", window [5e-4, 2e-3]");
    }

    // 7. Stark shift of a stray electron.
    {
        app::RunConfig cfg;
        cfg.environment.stray_island_radius = 1e-3;
        cfg.environment.stray_island_distance = 1e-3;
        const double s = budget_value(app::budget_rows(cfg), "stark_single_electron_MHz");
        report(7, "stray-electron Stark shift", s >= 300.0 && s <= 380.0,
               "shift = " + num(s) + " MHz, window [300, 380]");
    }

    // 8. Q budget arithmetic.
    {
        electrostatics::Geometry geom;  // L = 3 mm, H = 30 um
        const double r_contact = 0.1 * 1e9 / (k.speed_of_light * k.speed_of_light);
        const resonator::QBudget qb = resonator::q_budget(geom, r_contact);
        const bool rad_ok = std::abs(qb.q_radiative / 1e8 - 1.0) < 1e-12;
        const bool contact_ok = std::abs(qb.q_contact / 1e7 - 1.0) < 1e-12;
        const bool total_ok = std::abs(qb.q_total / 8.3333333e6 - 1.0) < 0.01;
        report(8, "Q budget", rad_ok && contact_ok && total_ok,
               "(L/H)^4 = " + num(qb.q_radiative) + ", contact = " + num(qb.q_contact) +
                   ", total = " + num(qb.q_total));
    }

    // 9. Closed-form dynamics checks.
    {
        const double g = kTwoPi * k.hbar * 2.8e6;

        dynamics::SystemModel m;
        m.couplings = {g};
        m.fock_cutoff = 6;
        m.mode_frequency = kTwoPi * 50e9;
        const auto initial = dynamics::QuantumState::product(1, 6, 1, 0);
        const double period = kPi * k.hbar / g;
        std::vector<double> times;
        for (int i = 0; i <= 200; ++i) times.push_back(2.0 * period * i / 200);
        const auto states = dynamics::evolve_unitary(m, initial, times);
        double rabi_err = 0.0;
        for (std::size_t i = 0; i < times.size(); ++i) {
            const double s = std::sin(g / k.hbar * times[i]);
            rabi_err = std::max(rabi_err, std::abs(states[i].rho(1, 1).real() - s * s));
        }

        dynamics::SystemModel pair;
        pair.atom_count = 2;
        pair.couplings = {g, g};
        pair.fock_cutoff = 4;
        pair.mode_frequency = kTwoPi * 50e9;
        const auto transfer = dynamics::two_atom_transfer(pair);
        const double t_expect = kPi * k.hbar / (std::sqrt(2.0) * g);
        const double t_err = std::abs(transfer.transfer_time / t_expect - 1.0);

        dynamics::SystemModel cavity;
        cavity.couplings = {0.0};
        cavity.kappa = kTwoPi * 5e4;
        cavity.fock_cutoff = 4;
        const auto photon = dynamics::QuantumState::product(1, 4, 0, 1);
        std::vector<double> decay_times;
        for (int i = 0; i <= 30; ++i) decay_times.push_back(3.0 / cavity.kappa * i / 30);
        const auto ts = dynamics::sample_observables(cavity, photon, decay_times);
        double decay_err = 0.0;
        const auto& n_t = ts.series("photon_number");
        for (std::size_t i = 0; i < decay_times.size(); ++i) {
            decay_err = std::max(decay_err,
                                 std::abs(n_t[i] - std::exp(-cavity.kappa * decay_times[i])));
        }

        const bool ok = rabi_err < 1e-6 && t_err < 1e-6 &&
                        transfer.fidelity >= 1.0 - 1e-8 && decay_err < 1e-6;
        report(9, "dynamics closed forms", ok,
               "Rabi err " + num(rabi_err) + ", transfer time err " + num(t_err) +
                   ", fidelity deficit " + num(1.0 - transfer.fidelity) + ", decay err " +
                   num(decay_err));
    }

    // 10. Open-system properties over 100 coupling periods.
    {
        const double g = kTwoPi * k.hbar * 2.8e6;
        const double period = kPi * k.hbar / g;

        dynamics::SystemModel closed;
        closed.couplings = {g};
        closed.fock_cutoff = 4;
        closed.mode_frequency = kTwoPi * 50e9;
        const auto initial = dynamics::QuantumState::product(1, 4, 1, 0);
        const std::vector<double> grid = {0.0, 25.0 * period, 50.0 * period, 100.0 * period};

        const Eigen::MatrixXcd n_exc =
            dynamics::number_operator(closed) + dynamics::excited_projector(closed, 0);
        double exc_drift = 0.0;
        for (const auto& s : dynamics::evolve_unitary(closed, initial, grid)) {
            exc_drift = std::max(exc_drift, std::abs((n_exc * s.rho).trace().real() - 1.0));
        }

        dynamics::SystemModel open = closed;
        open.kappa = kTwoPi * 5e4;
        open.gamma_decay = kTwoPi * 1e3;
        double trace_drift = 0.0;
        double min_eig = 0.0;
        for (const auto& s : dynamics::evolve_lindblad(open, initial, grid)) {
            trace_drift = std::max(trace_drift, std::abs(s.rho.trace().real() - 1.0));
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(s.rho);
            min_eig = std::min(min_eig, es.eigenvalues().minCoeff());
        }

        // Truncation insensitivity: enlarging the cutoff by two moves nothing.
        std::vector<double> sample;
        for (int i = 0; i <= 20; ++i) sample.push_back(2.0 * period * i / 20);
        dynamics::SystemModel small = open;
        small.fock_cutoff = 8;
        dynamics::SystemModel big = open;
        big.fock_cutoff = 10;
        const auto ts_small = dynamics::sample_observables(
            small, dynamics::QuantumState::product(1, 8, 1, 0), sample);
        const auto ts_big = dynamics::sample_observables(
            big, dynamics::QuantumState::product(1, 10, 1, 0), sample);
        double cutoff_shift = 0.0;
        for (std::size_t i = 0; i < sample.size(); ++i) {
            cutoff_shift = std::max(cutoff_shift,
                                    std::abs(ts_small.series("photon_number")[i] -
                                             ts_big.series("photon_number")[i]));
        }

        const bool ok = trace_drift <= 1e-8 && min_eig >= -1e-8 && exc_drift <= 1e-10 &&
                        cutoff_shift <= 1e-6;
        report(10, "open-system properties", ok,
               "trace drift " + num(trace_drift) + ", min eigenvalue " + num(min_eig) +
                   ", excitation drift " + num(exc_drift) + ", cutoff shift " +
                   num(cutoff_shift));
    }

    // 11. Determinism of repeated sweeps.
    {
        const app::RunConfig cfg;
        const std::vector<std::string> values = {"1 mm", "3 mm", "10 mm", "30 mm"};
        std::ostringstream a, b, err;
        app::cmd_sweep(cfg, "geometry.wire_length", values, a, err, false);
        app::cmd_sweep(cfg, "geometry.wire_length", values, b, err, false);
        report(11, "sweep determinism", a.str() == b.str() && !a.str().empty(),
               a.str() == b.str() ? "two runs byte-identical" : "runs differ");
    }

    if (g_failures > 0) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 11 criteria passed\n";
    return 0;
}
