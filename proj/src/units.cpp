#include "rydline/units.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace rydline {

const Constants& constants() noexcept {
    static const Constants k = [] {
        Constants c{};
        c.electron_charge = 1.602176634e-19 * 2.997924580e9;  // C -> esu
        c.bohr_radius = 5.29177210903e-9;
        c.hbar = 1.054571817e-27;
        c.boltzmann = 1.380649e-16;
        c.speed_of_light = 2.99792458e10;
        c.rubidium_mass = 86.909180527 * 1.66053906660e-24;
        c.fine_structure =
            c.electron_charge * c.electron_charge / (c.hbar * c.speed_of_light);
        return c;
    }();
    return k;
}

double rydberg_energy() noexcept {
    const Constants& k = constants();
    return k.electron_charge * k.electron_charge / (2.0 * k.bohr_radius);
}

}  // namespace rydline

namespace rydline::units {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kVoltsPerStatvolt = 299.792458;

struct UnitDef {
    std::string_view label;
    Dimension dimension;
    double to_internal;  // internal = lab_value * to_internal
    bool canonical;
};

const std::array<UnitDef, 45>& unit_table() {
    const Constants& k = constants();
    const double c2 = k.speed_of_light * k.speed_of_light;
    const double h = 2.0 * kPi * k.hbar;
    static const std::array<UnitDef, 45> table{{
        {"um", Dimension::Length, 1e-4, true},
        {"nm", Dimension::Length, 1e-7, false},
        {"mm", Dimension::Length, 1e-1, false},
        {"cm", Dimension::Length, 1.0, false},
        {"m", Dimension::Length, 1e2, false},
        {"us", Dimension::Time, 1e-6, true},
        {"ns", Dimension::Time, 1e-9, false},
        {"ms", Dimension::Time, 1e-3, false},
        {"s", Dimension::Time, 1.0, false},
        {"MHz (x2pi)", Dimension::AngularFrequency, 2.0 * kPi * 1e6, true},
        {"GHz (x2pi)", Dimension::AngularFrequency, 2.0 * kPi * 1e9, false},
        {"kHz (x2pi)", Dimension::AngularFrequency, 2.0 * kPi * 1e3, false},
        {"Hz (x2pi)", Dimension::AngularFrequency, 2.0 * kPi, false},
        {"rad/s", Dimension::AngularFrequency, 1.0, false},
        {"MHz", Dimension::OrdinaryFrequency, 1e6, true},
        {"GHz", Dimension::OrdinaryFrequency, 1e9, false},
        {"kHz", Dimension::OrdinaryFrequency, 1e3, false},
        {"Hz", Dimension::OrdinaryFrequency, 1.0, false},
        {"MHz (E/h)", Dimension::Energy, 1e6 * h, true},
        {"GHz (E/h)", Dimension::Energy, 1e9 * h, false},
        {"kHz (E/h)", Dimension::Energy, 1e3 * h, false},
        {"erg", Dimension::Energy, 1.0, false},
        {"e", Dimension::Charge, k.electron_charge, true},
        {"esu", Dimension::Charge, 1.0, false},
        {"fF", Dimension::Capacitance, 1e-24 * c2, true},
        {"pF", Dimension::Capacitance, 1e-21 * c2, false},
        {"F", Dimension::Capacitance, 1e-9 * c2, false},
        {"V/cm", Dimension::ElectricField, 1.0 / kVoltsPerStatvolt, true},
        {"V/m", Dimension::ElectricField, 1e-2 / kVoltsPerStatvolt, false},
        {"statV/cm", Dimension::ElectricField, 1.0, false},
        {"mK", Dimension::Temperature, 1e-3, true},
        {"K", Dimension::Temperature, 1.0, false},
        {"amu", Dimension::Mass, 1.66053906660e-24, true},
        {"g", Dimension::Mass, 1.0, false},
        {"Ohm", Dimension::Resistance, 1e9 / c2, true},
        {"s/cm", Dimension::Resistance, 1.0, false},
        {"uV", Dimension::Voltage, 1e-6 / kVoltsPerStatvolt, true},
        {"V", Dimension::Voltage, 1.0 / kVoltsPerStatvolt, false},
        {"statV", Dimension::Voltage, 1.0, false},
        {"dyn", Dimension::Force, 1.0, true},
        {"cm^3", Dimension::Volume, 1.0, true},
        {"D", Dimension::Dipole, 1e-18, true},
        {"esu*cm", Dimension::Dipole, 1.0, false},
        {"", Dimension::Dimensionless, 1.0, true},
        {"1", Dimension::Dimensionless, 1.0, false},
    }};
    return table;
}

const UnitDef& canonical_unit(Dimension d) {
    for (const UnitDef& u : unit_table()) {
        if (u.dimension == d && u.canonical) return u;
    }
    throw std::invalid_argument("no canonical lab unit registered for dimension '" +
                                std::string(dimension_name(d)) + "'");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string_view dimension_name(Dimension d) {
    switch (d) {
        case Dimension::Length: return "length";
        case Dimension::Time: return "time";
        case Dimension::AngularFrequency: return "angular-frequency";
        case Dimension::OrdinaryFrequency: return "ordinary-frequency";
        case Dimension::Energy: return "energy";
        case Dimension::Charge: return "charge";
        case Dimension::Capacitance: return "capacitance";
        case Dimension::ElectricField: return "electric-field";
        case Dimension::Temperature: return "temperature";
        case Dimension::Mass: return "mass";
        case Dimension::Resistance: return "resistance";
        case Dimension::Voltage: return "voltage";
        case Dimension::Force: return "force";
        case Dimension::Volume: return "volume";
        case Dimension::Dipole: return "dipole";
        case Dimension::Dimensionless: return "dimensionless";
    }
    throw std::invalid_argument("unknown dimension tag");
}

Quantity::Quantity(double value, Dimension dimension) : value_(value), dimension_(dimension) {
    dimension_name(dimension);  // rejects out-of-range tags
}

Quantity Quantity::operator+(const Quantity& other) const {
    if (dimension_ != other.dimension_) {
        throw std::invalid_argument("cannot add '" + std::string(dimension_name(dimension_)) +
                                    "' and '" + std::string(dimension_name(other.dimension_)) +
                                    "' without an explicit conversion");
    }
    return {value_ + other.value_, dimension_};
}

Quantity Quantity::operator-(const Quantity& other) const {
    return *this + Quantity(-other.value(), other.dimension());
}

LabValue to_lab_units(const Quantity& q) {
    const UnitDef& u = canonical_unit(q.dimension());
    return {q.value() / u.to_internal, std::string(u.label)};
}

Quantity from_lab_units(double value, std::string_view unit_label) {
    const std::string_view label = trim(unit_label);
    for (const UnitDef& u : unit_table()) {
        if (u.label == label) return {value * u.to_internal, u.dimension};
    }
    throw std::invalid_argument("unrecognized unit label '" + std::string(label) + "'");
}

Quantity parse_quantity(std::string_view text) {
    const std::string s{trim(text)};
    if (s.empty()) throw std::invalid_argument("empty quantity string");
    char* end = nullptr;
    const double value = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) {
        throw std::invalid_argument("quantity '" + s + "' does not start with a number");
    }
    return from_lab_units(value, std::string_view(end));
}

double parse_quantity_as(std::string_view text, Dimension expected) {
    const Quantity q = parse_quantity(text);
    if (q.dimension() != expected) {
        throw std::invalid_argument("quantity '" + std::string(text) + "' has dimension '" +
                                    std::string(dimension_name(q.dimension())) + "', expected '" +
                                    std::string(dimension_name(expected)) + "'");
    }
    return q.value();
}

double angular_from_ordinary(double nu) noexcept { return 2.0 * kPi * nu; }
double ordinary_from_angular(double omega) noexcept { return omega / (2.0 * kPi); }

double energy_to_frequency_hz(double energy) noexcept {
    return energy / (2.0 * kPi * constants().hbar);
}

double frequency_hz_to_energy(double nu) noexcept {
    return nu * 2.0 * kPi * constants().hbar;
}

}  // namespace rydline::units
