#pragma once

#include <numbers>

namespace cmorse {

// CODATA 2018 recommended values (SI). h and c are exact by definition.
namespace codata_2018 {

inline constexpr double planck_constant = 6.62607015e-34;          // J s, exact
inline constexpr double speed_of_light = 299792458.0;              // m/s, exact
inline constexpr double atomic_mass_constant = 1.66053906660e-27;  // kg
inline constexpr double reduced_planck_constant =
    planck_constant / (2.0 * std::numbers::pi);  // J s

}  // namespace codata_2018

// hbar^2 * (1 Angstrom^-1)^2 / (2 * 1 amu), expressed in cm^-1.
// This single constant carries every hbar^2/(2m) prefactor when masses are
// in amu, inverse lengths in Angstrom^-1 and energies in wavenumbers.
inline constexpr double spectroscopic_kinetic_constant = []() constexpr {
  constexpr double hbar = codata_2018::reduced_planck_constant;
  constexpr double joule_per_wavenumber =
      codata_2018::planck_constant * codata_2018::speed_of_light * 100.0;
  constexpr double inv_angstrom_sq = 1.0e20;  // (1 A^-1)^2 in m^-2
  return hbar * hbar * inv_angstrom_sq /
         (2.0 * codata_2018::atomic_mass_constant) / joule_per_wavenumber;
}();

}  // namespace cmorse
