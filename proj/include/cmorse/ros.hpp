#pragma once

#include <optional>
#include <string>

#include "cmorse/types.hpp"

namespace cmorse {

/// Coefficients of the spectral-reality quadratic A b3^2 + B b3 - A/4 = 0,
/// the condition E_i = 0 expressed in beta3:
///   Omega = a_r / a_i
///   A = 2 Omega m_r - (Omega^2 - 1) m_i
///   B = -2 Omega m_i - (Omega^2 - 1) m_r
struct RosCoefficients {
  double Omega = 0.0;
  double A = 0.0;
  double B = 0.0;
};

/// Throws ZeroImaginaryMorse when a_i = 0.
RosCoefficients ros_coefficients(const SystemParameters& p);

/// The two roots (-B +- sqrt(A^2 + B^2)) / (2A); their product is -1/4.
/// When A = 0 the quadratic collapses to B b3 = 0: the single root 0 is
/// returned in both slots with the degenerate flag set.
struct RosRoots {
  double plus = 0.0;   // the +sqrt branch
  double minus = 0.0;  // the -sqrt branch
  bool degenerate = false;
};

RosRoots ros_roots(const RosCoefficients& c);

enum class RosRejection { none_admissible, both_admissible, degenerate };

/// Root selection by strict normalizability (alpha1 > 0 and beta1 > 0; for
/// a_i > 0 these are the lower bounds b3 > -a_i/(2 a_r) and b3 > a_r/(2 a_i)),
/// plus the well depth the selected root implies through the forward
/// relation, hbar^2 b3^2 D / (2 |m|^2). The configured V_or generally
/// disagrees with implied_V_or; both are reported so the mismatch is
/// measurable.
struct RosSolution {
  RosRoots roots;
  std::optional<double> selected;
  std::optional<RosRejection> rejection;  // set when selected is empty
  std::optional<double> implied_V_or;
};

RosSolution ros_select(const SystemParameters& p, const RosRoots& roots);

/// Convenience: ros_coefficients + ros_roots + ros_select.
RosSolution ros_solve(const SystemParameters& p);

std::string to_string(RosRejection r);

}  // namespace cmorse
