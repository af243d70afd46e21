#pragma once

#include <complex>

#include "cmorse/types.hpp"

namespace cmorse {

/// X = a_r x1 - a_i p2, Y = a_i x1 + a_r p2. Linear in (x1, p2).
RotatedCoordinates rotate(const SystemParameters& p, const PhasePoint& pt);

/// Complex Morse potential V0 (e^{-2ax} - 2 e^{-ax}) evaluated at the complex
/// abscissa x = x1 + i p2, with V0 = V_or + i V_oi and a = a_r + i a_i.
/// Used as the in-process cross-check for potential_split.
std::complex<double> morse_complex(const SystemParameters& p, double V_oi,
                                   const PhasePoint& pt);

/// Real/imaginary split of the complex Morse potential over the phase plane:
///   V_r = V_or [e^{-2X}cos2Y - 2e^{-X}cosY] + V_oi [e^{-2X}sin2Y - 2e^{-X}sinY]
///   V_i = V_oi [e^{-2X}cos2Y - 2e^{-X}cosY] - V_or [e^{-2X}sin2Y - 2e^{-X}sinY]
/// Agrees with morse_complex to rounding. V_oi is passed in, not stored, so
/// that inconsistent (V_or, V_oi) pairs cannot enter silently.
PotentialSplit potential_split(const SystemParameters& p, double V_oi,
                               const PhasePoint& pt);

}  // namespace cmorse
