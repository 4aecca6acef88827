"""Rydberg-atom / transmission-line cavity QED design toolkit."""

from ._core import (
    ConfigError,
    Geometry,
    TruncationError,
    __version__,
    cavity_decay,
    constants,
    coupling_coefficient_full,
    coupling_coefficient_simple,
    coupling_g,
    coupling_g_dimensionless,
    dipole_matrix_element,
    disc_capacitance,
    effective_mass,
    equilibrium_charges,
    field_on_axis,
    free_space_coupling,
    linear_stark_shift,
    max_force,
    mean_square_radius,
    mode_frequency,
    mode_volume,
    motional_excitation,
    parse_quantity,
    q_budget,
    run_budget,
    run_estimate,
    run_simulate,
    run_sweep,
    sweepable_fields,
    thermal_voltage,
    transition_frequency,
    vdw_shift,
    wire_capacitance,
)

__all__ = [
    "ConfigError",
    "Geometry",
    "TruncationError",
    "__version__",
    "cavity_decay",
    "constants",
    "coupling_coefficient_full",
    "coupling_coefficient_simple",
    "coupling_g",
    "coupling_g_dimensionless",
    "dipole_matrix_element",
    "disc_capacitance",
    "effective_mass",
    "equilibrium_charges",
    "field_on_axis",
    "free_space_coupling",
    "linear_stark_shift",
    "max_force",
    "mean_square_radius",
    "mode_frequency",
    "mode_volume",
    "motional_excitation",
    "parse_quantity",
    "q_budget",
    "run_budget",
    "run_estimate",
    "run_simulate",
    "run_sweep",
    "sweepable_fields",
    "thermal_voltage",
    "transition_frequency",
    "vdw_shift",
    "wire_capacitance",
]
