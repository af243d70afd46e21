#include "cmorse/closed_form.hpp"

#include <cmath>

namespace cmorse {

double denominator(const SystemParameters& p) {
  return p.m_r * (p.a_r * p.a_r - p.a_i * p.a_i) + 2.0 * p.m_i * p.a_r * p.a_i;
}

double beta3_radicand(const SystemParameters& p) {
  const double D = denominator(p);
  if (D == 0.0)
    throw DegenerateDenominator("D = m_r(a_r^2-a_i^2) + 2 m_i a_r a_i is zero");
  return p.V_or / (p.prefactor * D);
}

double beta3_forward(const SystemParameters& p) {
  const double rad = beta3_radicand(p);
  if (rad < 0.0) throw ComplexBeta3("beta3 radicand is negative");
  return std::sqrt(rad);
}

double voi_constraint(const SystemParameters& p) {
  const double D = denominator(p);
  if (D == 0.0)
    throw DegenerateDenominator("D = m_r(a_r^2-a_i^2) + 2 m_i a_r a_i is zero");
  const double num =
      2.0 * p.m_r * p.a_r * p.a_i - p.m_i * (p.a_r * p.a_r - p.a_i * p.a_i);
  return p.V_or * num / D;
}

SolutionCoefficients coefficients(const SystemParameters& p, double beta3) {
  return {beta3 * p.a_i - 0.5 * p.a_r, beta3 * p.a_r + 0.5 * p.a_i, beta3};
}

EnergySpectrum spectrum(const SystemParameters& p,
                        const SolutionCoefficients& c) {
  const double P = p.a_r * p.a_r - p.a_i * p.a_i;
  const double Q = 2.0 * p.a_r * p.a_i;
  const double q = c.beta3 * c.beta3 - 0.25;
  const double u = P * q + c.beta3 * Q;
  const double v = Q * q - c.beta3 * P;
  return {p.prefactor * (p.m_r * u + p.m_i * v),
          p.prefactor * (p.m_r * v - p.m_i * u)};
}

EnergySpectrum spectrum_from_linear(const SystemParameters& p,
                                    const SolutionCoefficients& c) {
  const double d = c.beta1 * c.beta1 - c.alpha1 * c.alpha1;
  const double x = 2.0 * c.alpha1 * c.beta1;
  return {p.prefactor * (p.m_r * d + p.m_i * x),
          p.prefactor * (p.m_r * x - p.m_i * d)};
}

NormalizationStatus normalization(const SolutionCoefficients& c) {
  NormalizationStatus s;
  if (c.alpha1 <= 0.0)
    s.violated.push_back(NormalizationViolation::alpha1_nonpositive);
  if (c.beta1 <= 0.0)
    s.violated.push_back(NormalizationViolation::beta1_nonpositive);
  s.normalizable = s.violated.empty();
  if (s.normalizable) s.constant_N = std::sqrt(c.alpha1 * c.beta1);
  return s;
}

double probability_density(const SolutionCoefficients& c,
                           const PhasePoint& pt) {
  if (!(c.alpha1 > 0.0 && c.beta1 > 0.0))
    throw NotNormalizable("density requires alpha1 > 0 and beta1 > 0");
  return c.alpha1 * c.beta1 *
         std::exp(-2.0 * (c.alpha1 * std::abs(pt.x1) +
                          c.beta1 * std::abs(pt.p2)));
}

std::pair<double, double> wavefunction(const SystemParameters& p,
                                       const SolutionCoefficients& c, double N,
                                       const PhasePoint& pt) {
  if (!(N > 0.0)) throw NotNormalizable("normalization constant must be positive");
  const auto [g_r, g_i] = phase_functions<double>(p, c, pt.x1, pt.p2);
  const double env = N * std::exp(-g_i);
  return {env * std::cos(g_r), env * std::sin(g_r)};
}

std::complex<double> wavefunction_exponent_route(const SystemParameters& p,
                                                 const SolutionCoefficients& c,
                                                 double N,
                                                 const PhasePoint& pt) {
  if (!(N > 0.0)) throw NotNormalizable("normalization constant must be positive");
  const std::complex<double> a(p.a_r, p.a_i);
  const std::complex<double> x(pt.x1, pt.p2);
  const std::complex<double> ib3(0.0, c.beta3);
  const std::complex<double> expo = (0.5 + ib3) * a * x + ib3 * std::exp(-a * x);
  return N * std::exp(expo);
}

double exact_modulus_density(const SystemParameters& p,
                             const SolutionCoefficients& c, double N,
                             const PhasePoint& pt) {
  const auto [g_r, g_i] = phase_functions<double>(p, c, pt.x1, pt.p2);
  (void)g_r;
  return N * N * std::exp(-2.0 * g_i);
}

TimeEnvelope time_envelope(const EnergySpectrum& e, double hbar, double t) {
  TimeEnvelope env;
  env.amplitude = std::exp(-e.E_i * t / hbar);
  env.phase = e.E_r * t / hbar;
  env.behavior = e.E_i > 0.0   ? TimeBehavior::Decaying
                 : e.E_i < 0.0 ? TimeBehavior::Amplifying
                               : TimeBehavior::Stable;
  return env;
}

}  // namespace cmorse
