#include "cmorse/units.hpp"

#include <cmath>
#include <stdexcept>

#include "cmorse/constants.hpp"

namespace cmorse {

double kinetic_constant(UnitMode mode) {
  switch (mode) {
    case UnitMode::Dimensionless:
      return 0.5;  // hbar = 1
    case UnitMode::Spectroscopic:
      return spectroscopic_kinetic_constant;
  }
  throw std::logic_error("unreachable unit mode");
}

double hbar_value(UnitMode mode) {
  return std::sqrt(2.0 * kinetic_constant(mode));
}

SystemParameters make_parameters(UnitMode mode, double m_r, double m_i,
                                 double a_r, double a_i, double V_or) {
  return SystemParameters(m_r, m_i, a_r, a_i, V_or, hbar_value(mode));
}

SystemParameters to_dimensionless(const SystemParameters& p) {
  const double e_unit = 2.0 * spectroscopic_kinetic_constant;  // cm^-1 per unit energy
  return SystemParameters(p.m_r, p.m_i, p.a_r, p.a_i, p.V_or / e_unit, 1.0);
}

SystemParameters to_spectroscopic(const SystemParameters& p) {
  const double e_unit = 2.0 * spectroscopic_kinetic_constant;
  return SystemParameters(p.m_r, p.m_i, p.a_r, p.a_i, p.V_or * e_unit,
                          hbar_value(UnitMode::Spectroscopic));
}

std::string to_string(UnitMode mode) {
  return mode == UnitMode::Dimensionless ? "dimensionless" : "spectroscopic";
}

UnitMode unit_mode_from_string(const std::string& s) {
  if (s == "dimensionless") return UnitMode::Dimensionless;
  if (s == "spectroscopic") return UnitMode::Spectroscopic;
  throw std::invalid_argument("unknown unit mode: " + s);
}

std::string to_string(NormalizationViolation v) {
  return v == NormalizationViolation::alpha1_nonpositive ? "alpha1_nonpositive"
                                                         : "beta1_nonpositive";
}

}  // namespace cmorse
