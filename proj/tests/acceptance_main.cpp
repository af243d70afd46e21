// Acceptance suite: one line per criterion, exit code = number of failures.
// argv[1] must be the path to the cmorse CLI binary (used by the
// determinism criterion).

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cmorse/atlas.hpp"
#include "cmorse/closed_form.hpp"
#include "cmorse/oracle.hpp"
#include "cmorse/ros.hpp"
#include "cmorse/units.hpp"

using namespace cmorse;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok,
            const std::string& detail = {}) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

bool rel_eq(double got, double want, double tol) {
  return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SystemParameters h2(double m_i, double a_i) {
  return make_parameters(UnitMode::Spectroscopic, 0.5039, m_i, 1.868, a_i,
                         38266.0);
}

void criterion1() {
  const SystemParameters p(1.0, 1.0, 1.0, 1.0, 2.0, 1.0);
  bool ok = true;
  std::string detail;
  try {
    const double b3 = beta3_forward(p);
    const double voi = voi_constraint(p);
    const SolutionCoefficients c = coefficients(p, b3);
    const EnergySpectrum e = spectrum(p, c);
    const double N = normalization(c).constant_N;
    ok &= rel_eq(b3, 2.0, 1e-12);
    ok &= rel_eq(voi, 2.0, 1e-12);
    ok &= rel_eq(c.alpha1, 1.5, 1e-12);
    ok &= rel_eq(c.beta1, 2.5, 1e-12);
    ok &= rel_eq(N, std::sqrt(3.75), 1e-12);
    ok &= rel_eq(e.E_r, 2.875, 1e-12);
    ok &= rel_eq(e.E_i, 0.875, 1e-12);
    const auto res = oracle::coefficient_residuals(p, voi, c, e);
    for (int i = 0; i < 6; ++i) ok &= res.residual[i] / res.scale[i] < 1e-12;
    if (!ok) detail = "value or residual out of tolerance";
  } catch (const std::exception& ex) {
    ok = false;
    detail = ex.what();
  }
  report(1, "golden dimensionless case with six-relation confirmation", ok,
         detail);
}

oracle::BatteryResult battery() {
  static const oracle::BatteryResult b = oracle::run_battery(1729, 200);
  return b;
}

void criterion2() {
  const auto b = battery();
  const bool ok = b.max_pde_scaled < 1e-5 && b.halving_ratio > 3.0 &&
                  b.halving_ratio < 5.0;
  std::ostringstream d;
  d << "max scaled residual " << b.max_pde_scaled << ", halving ratio "
    << b.halving_ratio;
  report(2, "coupled-equation residual oracle over 200 seeded draws", ok,
         d.str());
}

void criterion3() {
  const auto b = battery();
  const bool ok = b.max_cr < 1e-6 && b.control_cr_corrupted_min > 1e-2;
  std::ostringstream d;
  d << "max CR residual " << b.max_cr << ", corrupted control "
    << b.control_cr_corrupted_min;
  report(3, "Cauchy-Riemann residuals with swapped-coefficient control", ok,
         d.str());
}

void criterion4() {
  // 50 random normalizable coefficient pairs, quadrature equals 1 +- 1e-6.
  oracle::SplitRng rng(404);
  bool ok = true;
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const SolutionCoefficients c{rng.uniform(0.05, 8.0), rng.uniform(0.05, 8.0),
                                 0.0};
    const double err = std::abs(oracle::quadrature_norm(c) - 1.0);
    worst = std::max(worst, err);
    ok &= err <= 1e-6;
  }
  std::ostringstream d;
  d << "worst |quadrature - 1| = " << worst;
  report(4, "normalization quadrature for 50 random coefficient pairs", ok,
         d.str());
}

void criterion5() {
  bool ok = true;
  std::string detail;
  oracle::SplitRng rng(505);
  int checked = 0;
  for (int k = 0; k < 2000 && checked < 500; ++k) {
    const SystemParameters p(rng.uniform(0.2, 2.0), rng.uniform(-2.0, 2.0),
                             rng.uniform(0.3, 2.5), rng.uniform(-2.5, 2.5),
                             1.0);
    if (std::abs(p.a_i) < 0.05) continue;
    const RosCoefficients c = ros_coefficients(p);
    const double cscale = std::max(std::abs(c.A), std::abs(c.B));
    if (std::abs(c.A) < 1e-6 * cscale) continue;
    ++checked;
    const RosRoots r = ros_roots(c);
    for (double b3 : {r.plus, r.minus}) {
      const double q = c.A * b3 * b3 + c.B * b3 - 0.25 * c.A;
      if (std::abs(q) > 1e-12 * cscale * std::max(1.0, b3 * b3)) {
        ok = false;
        detail = "root fails the quadratic";
      }
    }
    if (std::abs(r.plus * r.minus + 0.25) > 1e-12) {
      ok = false;
      detail = "root product differs from -1/4";
    }
    const RosSolution sol = ros_select(p, r);
    if (sol.selected) {
      const EnergySpectrum e = spectrum(p, coefficients(p, *sol.selected));
      if (std::abs(e.E_i) > 1e-12 * std::max(1.0, std::abs(e.E_r))) {
        ok = false;
        detail = "selected root does not zero E_i";
      }
    }
  }
  for (double m : {0.5, 1.0, 2.0}) {
    const SystemParameters p(m, m, 1.3, 1.3, 1.0);
    const RosRoots r = ros_roots(ros_coefficients(p));
    ok &= rel_eq(std::max(r.plus, r.minus), (1.0 + std::sqrt(2.0)) / 2.0, 1e-12);
    ok &= rel_eq(std::min(r.plus, r.minus), (1.0 - std::sqrt(2.0)) / 2.0, 1e-12);
  }
  report(5, "spectral-reality roots: quadratic, Vieta, selection, E_i = 0", ok,
         detail);
}

void criterion6() {
  bool ok = true;
  std::ostringstream d;
  const SystemParameters sym = h2(0.5039, 1.868);
  const atlas::CriticalValue ac =
      atlas::find_critical(sym, atlas::SweepAxis::a_i, 3.0, 6.0);
  const double expected = 1.868 * (1.0 + std::sqrt(2.0));
  ok &= std::abs(ac.value - expected) / expected <= 1e-6;
  const atlas::CriticalValue mc =
      atlas::find_critical(sym, atlas::SweepAxis::m_i, -1.0, 2.0);
  ok &= std::abs(mc.value) <= 1e-9;
  d << "a_c = " << ac.value << " (expected " << expected << "), m_c = "
    << mc.value;
  report(6, "critical values by bisection on the molecular parameters", ok,
         d.str());
}

void criterion7() {
  const auto rows = atlas::sweep(h2(0.5039, 1.868), atlas::SweepAxis::m_i, 0.1,
                                 2.0, 191, atlas::SweepMode::General, {});
  bool ok = rows.size() == 191;
  int argmin = -1;
  double best = 0.0;
  for (size_t i = 0; i < rows.size() && ok; ++i) {
    if (!rows[i].ppd) {
      ok = false;
      break;
    }
    if (argmin < 0 || *rows[i].ppd < best) {
      argmin = static_cast<int>(i);
      best = *rows[i].ppd;
    }
  }
  std::string detail;
  if (ok) {
    // Unique interior minimum: differences change sign exactly once.
    int sign_changes = 0;
    for (size_t i = 2; i < rows.size(); ++i) {
      const double d1 = *rows[i - 1].ppd - *rows[i - 2].ppd;
      const double d2 = *rows[i].ppd - *rows[i - 1].ppd;
      if (d1 < 0.0 && d2 > 0.0) ++sign_changes;
      if (d1 > 0.0 && d2 < 0.0) ++sign_changes;
    }
    const double step = rows[1].m_i - rows[0].m_i;
    ok = argmin > 0 && argmin + 1 < static_cast<int>(rows.size()) &&
         sign_changes == 1 && std::abs(rows[argmin].m_i - 0.5039) <= step + 1e-12;
    if (!ok) detail = "minimum location or uniqueness failed";

    // Analytic derivative of m_r^2/m_i + m_i changes sign exactly at m_r.
    auto deriv = [](double mi) { return 1.0 - 0.5039 * 0.5039 / (mi * mi); };
    ok &= deriv(0.5039 * (1 - 1e-9)) < 0.0 && deriv(0.5039 * (1 + 1e-9)) > 0.0;
  }
  report(7, "peak-density minimum at m_i = m_r on the symmetric slice", ok,
         detail);
}

void criterion8() {
  bool ok = true;
  std::string detail;
  const atlas::Thresholds thr;
  const int n = 101;
  int ros_admissible = 0;
  for (int i = 0; i < n && ok; ++i) {
    const double mi = -2.0 + 4.0 * i / (n - 1);
    for (int j = 0; j < n && ok; ++j) {
      const double ai = -5.0 + 10.0 * j / (n - 1);
      const SystemParameters p = h2(mi, ai);

      const atlas::SweepRow g = atlas::evaluate_general(p, thr);
      // Exclusivity: region label matches exactly one defining predicate.
      const double D = denominator(p);
      const double d_scale =
          std::sqrt(p.mod_m_sq) * (p.a_r * p.a_r + p.a_i * p.a_i);
      atlas::RegionLabel expect;
      if (std::abs(D) <= thr.d_tol * d_scale) {
        expect = atlas::RegionLabel::DegenerateCritical;
      } else {
        const double rad = p.V_or / (p.prefactor * D);
        if (rad < 0.0) {
          expect = atlas::RegionLabel::ComplexBeta3;
        } else {
          const SolutionCoefficients c = coefficients(p, std::sqrt(rad));
          expect = c.alpha1 > 0.0 && c.beta1 > 0.0
                       ? atlas::RegionLabel::NormalizablePositive
                   : c.alpha1 < 0.0 && c.beta1 < 0.0
                       ? atlas::RegionLabel::PositiveNonNormalizable
                       : atlas::RegionLabel::NegativePPD;
        }
      }
      if (g.region != expect) {
        ok = false;
        detail = "region label mismatch";
      }
      // Complex beta3 or failed normalization constraints imply NonPhysical.
      const bool normalizable = g.region == atlas::RegionLabel::NormalizablePositive;
      if (!normalizable && g.matter != atlas::MatterClass::NonPhysical) {
        ok = false;
        detail = "non-normalizable cell not NonPhysical";
      }

      const atlas::SweepRow r = atlas::evaluate_ros(p, thr);
      if (r.beta3.has_value() && p.a_i != p.a_r) {
        ++ros_admissible;
        if (r.matter != atlas::MatterClass::Deterministic) {
          ok = false;
          detail = "admissible reality cell not Deterministic";
        }
      }
    }
  }
  ok &= ros_admissible > 100;
  report(8, "classification totality and exclusivity on the 101x101 grid", ok,
         detail);
}

void criterion9(const std::string& cli) {
  const fs::path dir = fs::temp_directory_path() / "cmorse_acceptance";
  fs::create_directories(dir);
  auto run = [&](const std::string& args, const fs::path& out) {
    const std::string cmd =
        "\"" + cli + "\" " + args + " --out \"" + out.string() + "\"";
    return std::system(cmd.c_str());
  };
  bool ok = true;
  std::string detail;

  const std::string sweep_args =
      "sweep --units spectroscopic --m-r 0.5039 --a-r 1.868 --a-i 1.868 "
      "--v-or 38266 --axis m_i --min 0.1 --max 2.0 --count 191";
  const int r1 = run(sweep_args, dir / "s1.csv");
  const int r2 = run(sweep_args, dir / "s2.csv");
  if (r1 != 0 || r2 != 0) {
    ok = false;
    detail = "sweep runs failed";
  } else if (read_file(dir / "s1.csv") != read_file(dir / "s2.csv")) {
    ok = false;
    detail = "sweep outputs differ";
  }

  const std::string verify_args = "verify --seed 1729 --count 40";
  const int v1 = run(verify_args, dir / "v1.json");
  const int v2 = run(verify_args, dir / "v2.json");
  if (v1 != 0 || v2 != 0) {
    ok = false;
    detail = "verify runs failed";
  } else if (read_file(dir / "v1.json") != read_file(dir / "v2.json")) {
    ok = false;
    detail = "verify outputs differ";
  }

  // Config echo round-trip: echoed config re-parses to the same effective
  // config (stdout used so the echo destination is not part of the config).
  const int e1 = std::system(("\"" + cli +
                              "\" sweep --units spectroscopic --m-r 0.5039 "
                              "--a-r 1.868 --a-i 1.868 --v-or 38266 --axis m_i "
                              "--min 0.1 --max 2.0 --count 191 --echo-config > \"" +
                              (dir / "c1.json").string() + "\"")
                                 .c_str());
  const int e2 = std::system(("\"" + cli + "\" --config \"" +
                              (dir / "c1.json").string() +
                              "\" --echo-config > \"" +
                              (dir / "c2.json").string() + "\"")
                                 .c_str());
  if (e1 != 0 || e2 != 0 ||
      read_file(dir / "c1.json") != read_file(dir / "c2.json")) {
    ok = false;
    detail = "config round-trip failed";
  }

  report(9, "byte-identical CLI outputs across repeated runs", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cmorse-cli>\n";
    return 64;
  }
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9(argv[1]);
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) +
                                    " criterion(s) failed")
            << "\n";
  return failures;
}
