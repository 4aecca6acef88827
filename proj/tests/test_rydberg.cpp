#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rydline/constants.hpp"
#include "rydline/rydberg.hpp"

#include "test_util.hpp"

using namespace rydline;
using namespace rydline::rydberg;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
}

TEST_CASE("circular-state dipole matrix element") {
    CHECK(rel_err(dipole_matrix_element(50), 1.2228983420919857e-15) < 1e-12);
    CHECK(rel_err(dipole_matrix_element(50) / 1e-18, 1222.8983420919856) < 1e-12);
    CHECK(rel_err(dipole_matrix_element(100), 4.0 * dipole_matrix_element(50)) < 1e-14);
    CHECK_THROWS_AS(dipole_matrix_element(1), std::domain_error);
}

TEST_CASE("hydrogenic transition frequency") {
    const double w50 = transition_frequency(50);
    CHECK(rel_err(w50 / kTwoPi, 54.25978410435423e9) < 1e-12);
    CHECK(w50 / kTwoPi > 50e9);
    CHECK(w50 / kTwoPi < 58e9);

    CHECK(rel_err(transition_frequency(2) / kTwoPi, 2467381470351411.5) < 1e-12);

    // Large-N asymptote 2 Ry / (hbar N^3), approached from above.
    const double w200 = transition_frequency(200);
    const double asym = 2.0 * rydberg_energy() / (constants().hbar * 200.0 * 200.0 * 200.0);
    CHECK(w200 > asym);
    CHECK(std::abs(w200 / asym - 1.0) < 0.02);

    CHECK_THROWS_AS(transition_frequency(1), std::domain_error);
}

TEST_CASE("mean square radius") {
    const double a0 = constants().bohr_radius;
    // Ground state: <r^2> = 3 a0^2.
    CHECK(rel_err(mean_square_radius(1, 0), 3.0 * a0 * a0) < 1e-14);
    CHECK(mean_square_radius(50, 0) > mean_square_radius(50, 49));
    CHECK_THROWS_AS(mean_square_radius(50, 50), std::domain_error);
    CHECK_THROWS_AS(mean_square_radius(50, -1), std::domain_error);
}

TEST_CASE("van der Waals shift at the chip surface") {
    const double shift = vdw_shift(50, 1, 1e-3);
    const double shift_mhz = shift / constants().hbar / kTwoPi / 1e6;
    CHECK(rel_err(shift_mhz, -1.2690345833030365) < 1e-12);
    CHECK(shift_mhz > -2.6);
    CHECK(shift_mhz < -0.65);

    // Attractive everywhere, falling off as 1/h^3.
    CHECK(vdw_shift(30, 0, 1e-3) < 0.0);
    CHECK(rel_err(vdw_shift(50, 1, 2e-3), shift / 8.0) < 1e-12);
    CHECK(vdw_shift(50, 1, 2e-3) > shift);  // closer to zero farther away
    CHECK_THROWS_AS(vdw_shift(50, 1, 0.0), std::domain_error);
}

TEST_CASE("force bound during the exchange") {
    const double vdw = vdw_shift(50, 1, 1e-3);
    const double g = 1.829396613257584e-20;
    const double f = max_force(vdw, g, 1e-3);
    CHECK(rel_err(f, 4.352010263234512e-17) < 1e-12);
    CHECK(max_force(0.0, 0.0, 1e-3) == 0.0);
    // Linear in each magnitude.
    CHECK(rel_err(max_force(2.0 * vdw, g, 1e-3) - f, 3.0 * std::abs(vdw) / 1e-3) < 1e-10);
    CHECK(max_force(vdw, g, 1e-3) == max_force(-std::abs(vdw), -g, 1e-3));
}

TEST_CASE("motional excitation probability") {
    AtomSpec atom;
    atom.trap_frequency = kTwoPi * 5e4;

    const double f = 4.352010263234512e-17;
    const double t = 1.810998800894552e-7;
    const ExcitationProbability p = motional_excitation(f, t, atom);
    CHECK(rel_err(p.force_term, 6.495990269433671e-4) < 1e-12);
    CHECK(rel_err(p.trap_term, 4.046188243836125e-4) < 1e-12);
    CHECK(rel_err(p.total(), 1.0542178513269795e-3) < 1e-12);
    CHECK(p.total() == p.force_term + p.trap_term);

    // Both terms grow quadratically with the gate time.
    const ExcitationProbability p2 = motional_excitation(f, 2.0 * t, atom);
    CHECK(rel_err(p2.total(), 4.0 * p.total()) < 1e-12);
    CHECK(motional_excitation(f, 0.0, atom).total() == 0.0);

    AtomSpec untrapped;
    CHECK_THROWS_AS(motional_excitation(f, t, untrapped), std::domain_error);
    atom.species_mass = 0.0;
    CHECK_THROWS_AS(motional_excitation(f, t, atom), std::domain_error);
}

TEST_CASE("linear Stark shift of the extreme manifold state") {
    const double e = constants().electron_charge;
    const double field = electrostatics::field_on_axis(e, 1e-3, 1e-3);
    const double shift = linear_stark_shift(50, 49, field);
    CHECK(rel_err(shift / constants().hbar / kTwoPi / 1e6, 338.5592195465402) < 1e-12);

    CHECK(linear_stark_shift(50, 0, field) == 0.0);
    CHECK(linear_stark_shift(50, -49, field) == -shift);
    CHECK(rel_err(linear_stark_shift(50, 49, 2.0 * field), 2.0 * shift) < 1e-15);
    CHECK_THROWS_AS(linear_stark_shift(50, 50, field), std::domain_error);
    CHECK_THROWS_AS(linear_stark_shift(50, -50, field), std::domain_error);
}

TEST_CASE("coupling slope with N, fixed line versus retuned line") {
    // At fixed geometry g tracks N^2 sqrt(omega) ~ sqrt(N) and rises. The
    // alpha form instead retunes the line onto the sagging transition
    // (L = pi v / omega), and the longer wire makes g fall off as ~1/N.
    const double c = constants().speed_of_light;
    double prev_fixed = 0.0;
    double prev_tuned = std::numeric_limits<double>::infinity();
    for (int n = 20; n <= 80; ++n) {
        const double omega = transition_frequency(n);
        const double fixed =
            resonator::coupling_g(dipole_matrix_element(n), omega, 1e-3, 0.3);
        const double tuned = resonator::coupling_g_dimensionless(n, 1, c, 1e-3, omega);
        CHECK(fixed > prev_fixed);
        CHECK(tuned < prev_tuned);
        prev_fixed = fixed;
        prev_tuned = tuned;
    }
}

TEST_CASE("decoherence budget at the flagship point") {
    AtomSpec atom;
    atom.trap_frequency = kTwoPi * 5e4;
    SurfaceEnvironment env;
    env.patch_shift = kTwoPi * 7e6;
    electrostatics::Geometry geom;
    const resonator::ModeSpec mode =
        resonator::ModeSpec::from_geometry(1, geom, constants().speed_of_light, 1e6);
    const double g = 1.9057323195030358e-20;  // exchange coupling at the transition

    const BudgetReport report =
        decoherence_budget(atom, env, geom, mode, g, 0.1, kTwoPi * 1e3);

    auto value = [&report](const char* key) {
        const BudgetItem* item = report.find(key);
        REQUIRE(item != nullptr);
        return item->value;
    };

    CHECK(rel_err(value("coupling_g_MHz"), 2.876112503382891) < 1e-12);
    CHECK(rel_err(value("cavity_decay_kHz"), 49.96540966666667) < 1e-12);
    CHECK(rel_err(value("atomic_dephasing_kHz"), 1.0) < 1e-12);
    CHECK(rel_err(value("cooperativity"), 165554.99469133542) < 1e-12);
    CHECK(rel_err(value("vdw_shift_MHz"), -1.2690345833030365) < 1e-12);
    CHECK(rel_err(value("max_force_dyn"), 4.4283459694799633e-17) < 1e-12);
    CHECK(rel_err(value("interaction_time_us"), 0.17384577251825117) < 1e-12);
    CHECK(rel_err(value("motional_excitation"), 9.92637634360328e-4) < 1e-12);
    CHECK(rel_err(value("motional_force_term"), 6.197843037928527e-4) < 1e-12);
    CHECK(rel_err(value("motional_trap_term"), 3.728533305674751e-4) < 1e-12);
    CHECK(value("stark_single_electron_MHz") == 0.0);
    CHECK(rel_err(value("patch_shift_MHz"), 7.0) < 1e-12);
    CHECK(rel_err(value("thermal_voltage_uV"), 2.876184322753334) < 1e-12);

    // The window the design has to hit.
    CHECK(value("motional_excitation") > 5e-4);
    CHECK(value("motional_excitation") < 2e-3);

    // Internal consistency: the report's own entries must agree with each
    // other, not just with frozen numbers.
    const double g_rate = kTwoPi * value("coupling_g_MHz") * 1e6;
    const double kappa = kTwoPi * value("cavity_decay_kHz") * 1e3;
    const double gamma = kTwoPi * value("atomic_dephasing_kHz") * 1e3;
    CHECK(rel_err(value("cooperativity"), g_rate * g_rate / (kappa * gamma)) < 1e-12);
    CHECK(rel_err(value("motional_excitation"),
                  value("motional_force_term") + value("motional_trap_term")) < 1e-15);

    CHECK(report.find("nonexistent_key") == nullptr);
    for (const auto& item : report.items) CHECK(std::isfinite(item.value));
}

TEST_CASE("decoherence budget with a stray island") {
    AtomSpec atom;
    atom.trap_frequency = kTwoPi * 5e4;
    SurfaceEnvironment env;
    env.patch_shift = kTwoPi * 7e6;
    env.stray_island_radius = 1e-3;
    env.stray_island_distance = 1e-3;
    electrostatics::Geometry geom;
    const resonator::ModeSpec mode =
        resonator::ModeSpec::from_geometry(1, geom, constants().speed_of_light, 1e6);

    const BudgetReport report =
        decoherence_budget(atom, env, geom, mode, 1.9057323195030358e-20, 0.1, kTwoPi * 1e3);
    const BudgetItem* stark = report.find("stark_single_electron_MHz");
    REQUIRE(stark != nullptr);
    CHECK(rel_err(stark->value, 338.5592195465402) < 1e-12);
    CHECK(stark->value > 300.0);
    CHECK(stark->value < 380.0);
    CHECK(stark->unit == "MHz");
}
