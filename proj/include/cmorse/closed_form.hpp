#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "cmorse/types.hpp"

namespace cmorse {

/// D = m_r (a_r^2 - a_i^2) + 2 m_i a_r a_i. Root manifold of the solvable
/// family: beta3 and the peak density diverge as D -> 0.
double denominator(const SystemParameters& p);

/// Radicand of the beta3 square root, 2 |m|^2 V_or / (hbar^2 D).
/// Throws DegenerateDenominator when D = 0.
double beta3_radicand(const SystemParameters& p);

/// Nonnegative root beta3 = sqrt(2 |m|^2 V_or / (hbar^2 D)).
/// Throws ComplexBeta3 when the radicand is negative, DegenerateDenominator
/// when D = 0.
double beta3_forward(const SystemParameters& p);

/// Imaginary well depth implied by the real one:
///   V_oi = V_or [2 m_r a_r a_i - m_i (a_r^2 - a_i^2)] / D.
/// Throws DegenerateDenominator when D = 0.
double voi_constraint(const SystemParameters& p);

/// alpha1 = beta3 a_i - a_r/2, beta1 = beta3 a_r + a_i/2.
SolutionCoefficients coefficients(const SystemParameters& p, double beta3);

/// Eigenvalue in terms of beta3:
///   E_r = pref [ m_r {P q + beta3 Q} + m_i {Q q - beta3 P} ]
///   E_i = pref [ m_r {Q q - beta3 P} - m_i {P q + beta3 Q} ]
/// with P = a_r^2 - a_i^2, Q = 2 a_r a_i, q = beta3^2 - 1/4 and
/// pref = hbar^2/(2 |m|^2).
EnergySpectrum spectrum(const SystemParameters& p,
                        const SolutionCoefficients& c);

/// Same eigenvalue computed from the linear coefficients alone:
///   E_r = pref [ m_r (beta1^2 - alpha1^2) + 2 m_i alpha1 beta1 ]
///   E_i = pref [ 2 m_r alpha1 beta1 - m_i (beta1^2 - alpha1^2) ]
/// Must agree with spectrum(); kept as an independent route for checks.
EnergySpectrum spectrum_from_linear(const SystemParameters& p,
                                    const SolutionCoefficients& c);

/// Normalizability test and constant N = sqrt(alpha1 beta1).
NormalizationStatus normalization(const SolutionCoefficients& c);

/// Normalized density alpha1 beta1 exp(-2(alpha1|x1| + beta1|p2|)).
/// Peak value at the origin is alpha1*beta1. Throws NotNormalizable.
double probability_density(const SolutionCoefficients& c, const PhasePoint& pt);

/// Phase functions of the ansatz, templated so verification code can
/// evaluate them in extended precision:
///   g_r = beta1 x1 - alpha1 p2 + beta3 e^{-X} cos Y
///   g_i = alpha1 x1 + beta1 p2 - beta3 e^{-X} sin Y
template <class T>
std::pair<T, T> phase_functions(const SystemParameters& p,
                                const SolutionCoefficients& c, T x1, T p2) {
  const T ar = static_cast<T>(p.a_r), ai = static_cast<T>(p.a_i);
  const T b3 = static_cast<T>(c.beta3);
  const T X = ar * x1 - ai * p2;
  const T Y = ai * x1 + ar * p2;
  const T e = std::exp(-X);
  const T g_r = static_cast<T>(c.beta1) * x1 - static_cast<T>(c.alpha1) * p2 +
                b3 * e * std::cos(Y);
  const T g_i = static_cast<T>(c.alpha1) * x1 + static_cast<T>(c.beta1) * p2 -
                b3 * e * std::sin(Y);
  return {g_r, g_i};
}

/// Eigenfunction components psi = N e^{-g_i} (cos g_r, sin g_r).
/// Throws NotNormalizable when N would be undefined (alpha1 beta1 <= 0 is
/// rejected upstream; N is passed in so callers can reuse it).
std::pair<double, double> wavefunction(const SystemParameters& p,
                                       const SolutionCoefficients& c, double N,
                                       const PhasePoint& pt);

/// The same eigenfunction through the complex exponent
///   N exp[(1/2 + i beta3) a x + i beta3 e^{-a x}],  x = x1 + i p2.
/// Independent code path; agrees with wavefunction() to rounding.
std::complex<double> wavefunction_exponent_route(const SystemParameters& p,
                                                 const SolutionCoefficients& c,
                                                 double N,
                                                 const PhasePoint& pt);

/// Exact modulus N^2 e^{-2 g_i}. The normalized density above drops the
/// beta3 e^{-X} sin Y contribution and takes absolute values of x1, p2; this
/// diagnostic makes the difference measurable.
double exact_modulus_density(const SystemParameters& p,
                             const SolutionCoefficients& c, double N,
                             const PhasePoint& pt);

enum class TimeBehavior { Stable, Decaying, Amplifying };

/// amplitude = exp(-E_i t / hbar), phase = E_r t / hbar.
struct TimeEnvelope {
  double amplitude = 1.0;
  double phase = 0.0;
  TimeBehavior behavior = TimeBehavior::Stable;
};

TimeEnvelope time_envelope(const EnergySpectrum& e, double hbar, double t);

}  // namespace cmorse
