#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmorse/ros.hpp"
#include "cmorse/types.hpp"

namespace cmorse::atlas {

/// First-principles label of a parameter-plane cell.
///   NormalizablePositive     beta3 real, alpha1 > 0 and beta1 > 0
///   NegativePPD              beta3 real, alpha1*beta1 <= 0 (mixed or zero signs)
///   PositiveNonNormalizable  beta3 real, alpha1 < 0 and beta1 < 0
///   ComplexBeta3             radicand negative
///   DegenerateCritical       |D| below tolerance (divergence manifold)
enum class RegionLabel {
  NormalizablePositive,
  NegativePPD,
  PositiveNonNormalizable,
  ComplexBeta3,
  DegenerateCritical,
};

/// Matter taxonomy. Classification is total: every input maps to exactly one
/// label, resolved in the precedence order of classify_matter.
enum class MatterClass {
  RealEigenspectral,
  QuasiStable,
  PurelyComplex,
  NonPhysical,
  Deterministic,
  GeneralComplex,
};

struct Thresholds {
  double eta0 = 0.05;   // quasi-stable bound on |E_i|/|E_r|
  double eps = 1e-9;    // zero tolerance for E_i, relative to max(1,|E_r|)
  double d_tol = 1e-12; // degenerate-denominator tolerance, relative
};

RegionLabel classify_region(const SystemParameters& p,
                            const Thresholds& thr = {});

/// Precedence: NonPhysical when not normalizable; Deterministic when
/// |E_i| <= eps*max(1,|E_r|) and a_r != a_i; RealEigenspectral when
/// |E_i| <= eps*max(1,|E_r|); PurelyComplex when E_r < 0 and E_i < 0;
/// QuasiStable when E_i > 0 and |E_i| <= eta0 |E_r|; else GeneralComplex.
MatterClass classify_matter(const SystemParameters& p, const EnergySpectrum& e,
                            const NormalizationStatus& norm,
                            const Thresholds& thr);

enum class SweepAxis { m_i, a_i };
enum class SweepMode { General, Ros };

/// One evaluated cell. Numeric fields are empty when the quantity does not
/// exist there (complex beta3, degenerate denominator, or no admissible
/// spectral-reality root).
struct SweepRow {
  double m_i = 0.0;
  double a_i = 0.0;
  std::optional<double> beta3;
  std::optional<double> alpha1;
  std::optional<double> beta1;
  std::optional<double> ppd;  // alpha1*beta1 whenever beta3 is real
  std::optional<double> E_r;
  std::optional<double> E_i;
  RegionLabel region = RegionLabel::DegenerateCritical;
  MatterClass matter = MatterClass::NonPhysical;
};

/// Evaluate one cell through the forward closed forms.
SweepRow evaluate_general(const SystemParameters& p, const Thresholds& thr);

/// Evaluate one cell in spectral-reality mode: beta3 is the admissible
/// quadratic root. Inadmissible cells keep empty numeric fields; their
/// region reflects the positive candidate root (or the forward label when
/// a_i = 0, where no quadratic exists).
SweepRow evaluate_ros(const SystemParameters& p, const Thresholds& thr);

/// Grid sweep along one axis, ascending order, count >= 2 points.
std::vector<SweepRow> sweep(const SystemParameters& base, SweepAxis axis,
                            double min, double max, int count, SweepMode mode,
                            const Thresholds& thr);

enum class CriticalKind { denominator_root };

struct CriticalValue {
  SweepAxis axis = SweepAxis::a_i;
  double value = 0.0;
  CriticalKind kind = CriticalKind::denominator_root;
  double bracket_lo = 0.0;  // final bracket, width below tol
  double bracket_hi = 0.0;
  double d_at_value = 0.0;
};

/// Bisection on D along the axis until the bracket is narrower than tol.
/// Throws NoSignChange when D has the same sign at both ends.
CriticalValue find_critical(const SystemParameters& base, SweepAxis axis,
                            double lo, double hi, double tol = 1e-9);

/// Closed-form roots of D = 0, used as the oracle for find_critical.
///   axis a_i: a_i = a_r (m_i +- |m|) / m_r
///   axis m_i: m_i = -m_r (a_r^2 - a_i^2) / (2 a_r a_i)
std::vector<double> critical_analytic(const SystemParameters& base,
                                      SweepAxis axis);

std::string to_string(RegionLabel r);
std::string to_string(MatterClass m);
std::string to_string(SweepAxis a);
SweepAxis sweep_axis_from_string(const std::string& s);

}  // namespace cmorse::atlas
