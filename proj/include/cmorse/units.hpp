#pragma once

#include <string>

#include "cmorse/types.hpp"

namespace cmorse {

// Two unit systems are supported:
//   Dimensionless  — hbar = 1 exactly; all quantities are pure numbers.
//   Spectroscopic  — energies in cm^-1, lengths in Angstrom, inverse lengths
//                    in Angstrom^-1, masses in amu. The numeric value of
//                    hbar^2 in this system is 2 * spectroscopic_kinetic_constant,
//                    so hbar^2/(2m) = K / (m in amu).
// Note: published parameter tables in this domain quote masses with the
// symbol mu; they are interpreted here as amu.
enum class UnitMode { Dimensionless, Spectroscopic };

/// hbar^2/2 in the given system, i.e. the K with hbar^2/(2m) = K/m.
double kinetic_constant(UnitMode mode);

/// Numeric value of hbar in the given system (1 or sqrt(2K)).
double hbar_value(UnitMode mode);

/// Build parameters in one of the two systems. hbar is fixed by the mode.
SystemParameters make_parameters(UnitMode mode, double m_r, double m_i,
                                 double a_r, double a_i, double V_or);

/// Map spectroscopic parameters onto the hbar = 1 system. Masses and inverse
/// lengths keep their numeric values (unit mass = 1 amu, unit length = 1 A);
/// energies are divided by 2K.
SystemParameters to_dimensionless(const SystemParameters& p);

/// Inverse of to_dimensionless.
SystemParameters to_spectroscopic(const SystemParameters& p);

std::string to_string(UnitMode mode);
UnitMode unit_mode_from_string(const std::string& s);

}  // namespace cmorse
