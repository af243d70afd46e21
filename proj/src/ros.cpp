#include "cmorse/ros.hpp"

#include <cmath>

#include "cmorse/closed_form.hpp"

namespace cmorse {

RosCoefficients ros_coefficients(const SystemParameters& p) {
  if (p.a_i == 0.0)
    throw ZeroImaginaryMorse("Omega = a_r/a_i undefined for a_i = 0");
  const double Om = p.a_r / p.a_i;
  const double w = Om * Om - 1.0;
  return {Om, 2.0 * Om * p.m_r - w * p.m_i, -2.0 * Om * p.m_i - w * p.m_r};
}

RosRoots ros_roots(const RosCoefficients& c) {
  if (c.A == 0.0) return {0.0, 0.0, true};
  // Stable evaluation of (-B +- sqrt(A^2 + B^2)) / (2A): the branch matching
  // the sign of B cancels catastrophically when |A| << |B|, so that root is
  // recovered from the product identity r+ r- = -1/4 instead.
  const double disc = std::sqrt(c.A * c.A + c.B * c.B);
  const double q = -0.5 * (c.B + std::copysign(disc, c.B));
  const double direct = q / c.A;          // the non-cancelling branch
  const double other = -c.A / (4.0 * q);  // its Vieta partner
  if (c.B < 0.0) return {direct, other, false};
  return {other, direct, false};
}

namespace {

// Strict positivity of both ansatz coefficients. For a_i > 0 this is exactly
// the pair of lower bounds b3 > -a_i/(2 a_r) and b3 > a_r/(2 a_i); for
// a_i < 0 the positivity of alpha1 is unsatisfiable and no root qualifies.
// Roots within rounding distance of the boundary are rejected: the
// normalization constant degenerates to zero there.
bool admissible(const SystemParameters& p, double b3) {
  const SolutionCoefficients c = coefficients(p, b3);
  const double tol_a = 1e-12 * (std::abs(b3 * p.a_i) + 0.5 * p.a_r);
  const double tol_b = 1e-12 * (std::abs(b3 * p.a_r) + 0.5 * std::abs(p.a_i));
  return c.alpha1 > tol_a && c.beta1 > tol_b;
}

}  // namespace

RosSolution ros_select(const SystemParameters& p, const RosRoots& roots) {
  RosSolution sol;
  sol.roots = roots;
  if (roots.degenerate) {
    if (admissible(p, 0.0)) {
      sol.selected = 0.0;
    } else {
      sol.rejection = RosRejection::degenerate;
    }
  } else {
    const bool ok_plus = admissible(p, roots.plus);
    const bool ok_minus = admissible(p, roots.minus);
    if (ok_plus && ok_minus) {
      sol.rejection = RosRejection::both_admissible;
    } else if (ok_plus) {
      sol.selected = roots.plus;
    } else if (ok_minus) {
      sol.selected = roots.minus;
    } else {
      sol.rejection = RosRejection::none_admissible;
    }
  }
  if (sol.selected) {
    const double b3 = *sol.selected;
    sol.implied_V_or = p.prefactor * b3 * b3 * denominator(p);
  }
  return sol;
}

RosSolution ros_solve(const SystemParameters& p) {
  return ros_select(p, ros_roots(ros_coefficients(p)));
}

std::string to_string(RosRejection r) {
  switch (r) {
    case RosRejection::none_admissible:
      return "none_admissible";
    case RosRejection::both_admissible:
      return "both_admissible";
    case RosRejection::degenerate:
      return "degenerate";
  }
  return "unknown";
}

}  // namespace cmorse
