#pragma once

#include <string>
#include <string_view>

#include "rydline/constants.hpp"

namespace rydline::units {

/// The dimensions this toolkit actually needs. Capacitance and resistance are
/// Gaussian (capacitance carries dimension of length). Angular frequency
/// (rad/s) and ordinary frequency (Hz) are deliberately distinct dimensions:
/// they differ by exactly 2*pi and may only be mixed through the explicit
/// converters below.
enum class Dimension {
    Length,
    Time,
    AngularFrequency,
    OrdinaryFrequency,
    Energy,
    Charge,
    Capacitance,
    ElectricField,
    Temperature,
    Mass,
    Resistance,
    Voltage,
    Force,
    Volume,
    Dipole,
    Dimensionless,
};

std::string_view dimension_name(Dimension d);

/// A Gaussian-CGS value tagged with its dimension. Arithmetic between
/// mismatched dimensions throws std::invalid_argument.
class Quantity {
public:
    Quantity(double value, Dimension dimension);

    double value() const noexcept { return value_; }
    Dimension dimension() const noexcept { return dimension_; }

    Quantity operator+(const Quantity& other) const;
    Quantity operator-(const Quantity& other) const;
    Quantity operator*(double scale) const noexcept { return {value_ * scale, dimension_}; }

private:
    double value_;
    Dimension dimension_;
};

struct LabValue {
    double value;
    std::string unit;
};

/// Convert to the canonical laboratory unit for the dimension (length -> um,
/// capacitance -> fF, temperature -> mK, ...). Angular frequencies are
/// reported as nu = omega/2pi in MHz with the marker "(x2pi)" in the unit
/// label; energies as E/h in MHz with the marker "(E/h)".
LabValue to_lab_units(const Quantity& q);

/// Inverse of to_lab_units. Accepts the canonical labels plus common aliases
/// (mm, GHz, K, ...). Unrecognized labels throw std::invalid_argument naming
/// the label.
Quantity from_lab_units(double value, std::string_view unit_label);

/// Parse "10 um", "3 mm", "100 mK", "1e6" (bare numbers are dimensionless).
Quantity parse_quantity(std::string_view text);

/// Parse and require a dimension; returns the internal Gaussian-CGS value.
double parse_quantity_as(std::string_view text, Dimension expected);

/// omega = 2*pi*nu, exactly.
double angular_from_ordinary(double nu) noexcept;
/// nu = omega/2pi, exactly.
double ordinary_from_angular(double omega) noexcept;

/// E/h in Hz for an energy in erg, and back.
double energy_to_frequency_hz(double energy) noexcept;
double frequency_hz_to_energy(double nu) noexcept;

}  // namespace rydline::units
