#include "cmorse/atlas.hpp"

#include <cmath>
#include <stdexcept>

#include "cmorse/closed_form.hpp"

namespace cmorse::atlas {

namespace {

double denominator_scale(const SystemParameters& p) {
  return std::sqrt(p.mod_m_sq) * (p.a_r * p.a_r + p.a_i * p.a_i);
}

RegionLabel region_from_signs(const SolutionCoefficients& c) {
  if (c.alpha1 > 0.0 && c.beta1 > 0.0) return RegionLabel::NormalizablePositive;
  if (c.alpha1 < 0.0 && c.beta1 < 0.0)
    return RegionLabel::PositiveNonNormalizable;
  return RegionLabel::NegativePPD;
}

SystemParameters with_axis(const SystemParameters& base, SweepAxis axis,
                           double v) {
  if (axis == SweepAxis::m_i)
    return SystemParameters(base.m_r, v, base.a_r, base.a_i, base.V_or,
                            base.hbar);
  return SystemParameters(base.m_r, base.m_i, base.a_r, v, base.V_or,
                          base.hbar);
}

}  // namespace

RegionLabel classify_region(const SystemParameters& p, const Thresholds& thr) {
  const double D = denominator(p);
  if (std::abs(D) <= thr.d_tol * denominator_scale(p))
    return RegionLabel::DegenerateCritical;
  const double rad = p.V_or / (p.prefactor * D);
  if (rad < 0.0) return RegionLabel::ComplexBeta3;
  return region_from_signs(coefficients(p, std::sqrt(rad)));
}

MatterClass classify_matter(const SystemParameters& p, const EnergySpectrum& e,
                            const NormalizationStatus& norm,
                            const Thresholds& thr) {
  if (!norm.normalizable) return MatterClass::NonPhysical;
  const bool real_spectrum =
      std::abs(e.E_i) <= thr.eps * std::max(1.0, std::abs(e.E_r));
  if (real_spectrum && p.a_r != p.a_i) return MatterClass::Deterministic;
  if (real_spectrum) return MatterClass::RealEigenspectral;
  if (e.E_r < 0.0 && e.E_i < 0.0) return MatterClass::PurelyComplex;
  if (e.E_i > 0.0 && std::abs(e.E_i) <= thr.eta0 * std::abs(e.E_r))
    return MatterClass::QuasiStable;
  return MatterClass::GeneralComplex;
}

SweepRow evaluate_general(const SystemParameters& p, const Thresholds& thr) {
  SweepRow row;
  row.m_i = p.m_i;
  row.a_i = p.a_i;
  row.region = classify_region(p, thr);
  if (row.region == RegionLabel::ComplexBeta3 ||
      row.region == RegionLabel::DegenerateCritical) {
    row.matter = MatterClass::NonPhysical;
    return row;
  }
  const double b3 = beta3_forward(p);
  const SolutionCoefficients c = coefficients(p, b3);
  const EnergySpectrum e = spectrum(p, c);
  row.beta3 = b3;
  row.alpha1 = c.alpha1;
  row.beta1 = c.beta1;
  row.ppd = c.alpha1 * c.beta1;
  row.E_r = e.E_r;
  row.E_i = e.E_i;
  row.matter = classify_matter(p, e, normalization(c), thr);
  return row;
}

SweepRow evaluate_ros(const SystemParameters& p, const Thresholds& thr) {
  SweepRow row;
  row.m_i = p.m_i;
  row.a_i = p.a_i;
  row.matter = MatterClass::NonPhysical;
  if (p.a_i == 0.0) {
    row.region = classify_region(p, thr);
    return row;
  }
  const RosSolution sol = ros_solve(p);
  if (!sol.selected) {
    // Label the cell by the positive candidate root; the admissible solution
    // does not exist, so the numeric columns stay empty.
    const double candidate =
        sol.roots.degenerate ? 0.0
        : (sol.roots.plus > 0.0 ? sol.roots.plus : sol.roots.minus);
    row.region = region_from_signs(coefficients(p, candidate));
    return row;
  }
  const double b3 = *sol.selected;
  const SolutionCoefficients c = coefficients(p, b3);
  const EnergySpectrum e = spectrum(p, c);
  row.beta3 = b3;
  row.alpha1 = c.alpha1;
  row.beta1 = c.beta1;
  row.ppd = c.alpha1 * c.beta1;
  row.E_r = e.E_r;
  row.E_i = e.E_i;
  row.region = region_from_signs(c);
  row.matter = classify_matter(p, e, normalization(c), thr);
  return row;
}

std::vector<SweepRow> sweep(const SystemParameters& base, SweepAxis axis,
                            double min, double max, int count, SweepMode mode,
                            const Thresholds& thr) {
  if (count < 2) throw std::invalid_argument("sweep count must be >= 2");
  if (!(min < max)) throw std::invalid_argument("sweep needs min < max");
  std::vector<SweepRow> rows;
  rows.reserve(count);
  const double step = (max - min) / (count - 1);
  for (int k = 0; k < count; ++k) {
    const double v = k == count - 1 ? max : min + k * step;
    const SystemParameters p = with_axis(base, axis, v);
    rows.push_back(mode == SweepMode::General ? evaluate_general(p, thr)
                                              : evaluate_ros(p, thr));
  }
  return rows;
}

CriticalValue find_critical(const SystemParameters& base, SweepAxis axis,
                            double lo, double hi, double tol) {
  auto d = [&](double v) {
    if (axis == SweepAxis::a_i)
      return base.m_r * (base.a_r * base.a_r - v * v) +
             2.0 * base.m_i * base.a_r * v;
    return base.m_r * (base.a_r * base.a_r - base.a_i * base.a_i) +
           2.0 * v * base.a_r * base.a_i;
  };
  double flo = d(lo), fhi = d(hi);
  if (flo == 0.0) hi = lo;
  if (fhi == 0.0) lo = hi;
  if (lo != hi) {
    if ((flo < 0.0) == (fhi < 0.0))
      throw NoSignChange("D has the same sign at both bracket ends");
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      const double fm = d(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
  }
  CriticalValue cv;
  cv.axis = axis;
  cv.value = 0.5 * (lo + hi);
  cv.bracket_lo = lo;
  cv.bracket_hi = hi;
  cv.d_at_value = d(cv.value);
  return cv;
}

std::vector<double> critical_analytic(const SystemParameters& base,
                                      SweepAxis axis) {
  if (axis == SweepAxis::a_i) {
    const double mod_m = std::sqrt(base.mod_m_sq);
    const double r1 = base.a_r * (base.m_i - mod_m) / base.m_r;
    const double r2 = base.a_r * (base.m_i + mod_m) / base.m_r;
    return {r1, r2};
  }
  if (base.a_i == 0.0) return {};  // D is constant in m_i
  return {-base.m_r * (base.a_r * base.a_r - base.a_i * base.a_i) /
          (2.0 * base.a_r * base.a_i)};
}

std::string to_string(RegionLabel r) {
  switch (r) {
    case RegionLabel::NormalizablePositive: return "NormalizablePositive";
    case RegionLabel::NegativePPD: return "NegativePPD";
    case RegionLabel::PositiveNonNormalizable: return "PositiveNonNormalizable";
    case RegionLabel::ComplexBeta3: return "ComplexBeta3";
    case RegionLabel::DegenerateCritical: return "DegenerateCritical";
  }
  return "unknown";
}

std::string to_string(MatterClass m) {
  switch (m) {
    case MatterClass::RealEigenspectral: return "RealEigenspectral";
    case MatterClass::QuasiStable: return "QuasiStable";
    case MatterClass::PurelyComplex: return "PurelyComplex";
    case MatterClass::NonPhysical: return "NonPhysical";
    case MatterClass::Deterministic: return "Deterministic";
    case MatterClass::GeneralComplex: return "GeneralComplex";
  }
  return "unknown";
}

std::string to_string(SweepAxis a) { return a == SweepAxis::m_i ? "m_i" : "a_i"; }

SweepAxis sweep_axis_from_string(const std::string& s) {
  if (s == "m_i") return SweepAxis::m_i;
  if (s == "a_i") return SweepAxis::a_i;
  throw std::invalid_argument("unknown sweep axis: " + s);
}

}  // namespace cmorse::atlas
