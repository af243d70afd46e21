#include "cmorse/potential.hpp"

#include <cmath>

namespace cmorse {

RotatedCoordinates rotate(const SystemParameters& p, const PhasePoint& pt) {
  return {p.a_r * pt.x1 - p.a_i * pt.p2, p.a_i * pt.x1 + p.a_r * pt.p2};
}

std::complex<double> morse_complex(const SystemParameters& p, double V_oi,
                                   const PhasePoint& pt) {
  const std::complex<double> a(p.a_r, p.a_i);
  const std::complex<double> x(pt.x1, pt.p2);
  const std::complex<double> V0(p.V_or, V_oi);
  const std::complex<double> e = std::exp(-a * x);
  return V0 * (e * e - 2.0 * e);
}

PotentialSplit potential_split(const SystemParameters& p, double V_oi,
                               const PhasePoint& pt) {
  const auto [X, Y] = rotate(p, pt);
  const double e1 = std::exp(-X);
  const double e2 = e1 * e1;
  const double Bc = e2 * std::cos(2.0 * Y) - 2.0 * e1 * std::cos(Y);
  const double Bs = e2 * std::sin(2.0 * Y) - 2.0 * e1 * std::sin(Y);
  return {p.V_or * Bc + V_oi * Bs, V_oi * Bc - p.V_or * Bs};
}

}  // namespace cmorse
