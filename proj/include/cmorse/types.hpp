#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cmorse {

// Thrown when the coefficient denominator D = m_r(a_r^2 - a_i^2) + 2 m_i a_r a_i
// vanishes. On this manifold beta3 and the peak density diverge; callers that
// map the parameter plane locate it deliberately instead of dividing by it.
struct DegenerateDenominator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when the beta3 radicand is negative: no real solution family exists
// at these parameters.
struct ComplexBeta3 : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by operations that require alpha1 > 0 and beta1 > 0.
struct NotNormalizable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by the spectral-reality machinery when a_i = 0 (Omega = a_r/a_i
// undefined).
struct ZeroImaginaryMorse : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by bisection when the bracket contains no sign change.
struct NoSignChange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Complex-mass Morse system: m = m_r + i m_i, a = a_r + i a_i, real well
/// depth V_or, in units where hbar has the given numeric value.
///
/// mod_m_sq and prefactor = hbar^2 / (2 |m|^2) are cached because every
/// spectral formula carries that prefactor.
struct SystemParameters {
  double m_r = 1.0;   // mass, real part (> 0)
  double m_i = 0.0;   // mass, imaginary part
  double a_r = 1.0;   // inverse length, real part (> 0)
  double a_i = 0.0;   // inverse length, imaginary part
  double V_or = 1.0;  // well depth, real part (>= 0)
  double hbar = 1.0;  // action

  double mod_m_sq = 1.0;   // m_r^2 + m_i^2
  double prefactor = 0.5;  // hbar^2 / (2 mod_m_sq)

  SystemParameters() = default;

  SystemParameters(double mr, double mi, double ar, double ai, double vor,
                   double hb = 1.0)
      : m_r(mr), m_i(mi), a_r(ar), a_i(ai), V_or(vor), hbar(hb) {
    if (!(m_r > 0.0)) throw std::invalid_argument("m_r must be positive");
    if (!(a_r > 0.0)) throw std::invalid_argument("a_r must be positive");
    if (V_or < 0.0) throw std::invalid_argument("V_or must be nonnegative");
    if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
    mod_m_sq = m_r * m_r + m_i * m_i;
    prefactor = hbar * hbar / (2.0 * mod_m_sq);
  }
};

/// A point of the extended phase plane. p2 carries length units so that a*x
/// is dimensionless along both directions.
struct PhasePoint {
  double x1 = 0.0;
  double p2 = 0.0;
};

/// X = a_r x1 - a_i p2, Y = a_i x1 + a_r p2; the arguments of the
/// exponential-trigonometric basis.
struct RotatedCoordinates {
  double X = 0.0;
  double Y = 0.0;
};

struct PotentialSplit {
  double V_r = 0.0;
  double V_i = 0.0;
};

/// Ansatz coefficients of the exponential phase functions.
/// alpha1 = beta3 a_i - a_r/2 and beta1 = beta3 a_r + a_i/2 when generated
/// from the same parameters.
struct SolutionCoefficients {
  double alpha1 = 0.0;  // inverse length
  double beta1 = 0.0;   // inverse length
  double beta3 = 0.0;   // dimensionless
};

struct EnergySpectrum {
  double E_r = 0.0;
  double E_i = 0.0;
};

enum class NormalizationViolation { alpha1_nonpositive, beta1_nonpositive };

/// Outcome of the normalizability test alpha1 > 0 && beta1 > 0.
/// constant_N = sqrt(alpha1 * beta1) is meaningful only when normalizable.
struct NormalizationStatus {
  bool normalizable = false;
  double constant_N = 0.0;
  std::vector<NormalizationViolation> violated;
};

std::string to_string(NormalizationViolation v);

}  // namespace cmorse
