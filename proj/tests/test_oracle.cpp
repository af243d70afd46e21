#include <doctest.h>

#include <cmath>

#include "cmorse/closed_form.hpp"
#include "cmorse/oracle.hpp"

using namespace cmorse;

namespace {

const SystemParameters golden(1.0, 1.0, 1.0, 1.0, 2.0, 1.0);

struct GoldenSolution {
  double voi;
  SolutionCoefficients c;
  EnergySpectrum e;
  double N;
};

GoldenSolution solve_golden() {
  GoldenSolution s;
  s.voi = voi_constraint(golden);
  s.c = coefficients(golden, beta3_forward(golden));
  s.e = spectrum(golden, s.c);
  s.N = normalization(s.c).constant_N;
  return s;
}

}  // namespace

TEST_CASE("pde residual vanishes for the closed form") {
  const GoldenSolution s = solve_golden();
  const oracle::PdeResidual r =
      oracle::pde_residual(golden, s.voi, s.c, s.e, {0.3, -0.2}, 1e-4);
  CHECK(r.r_a < 1e-6);
  CHECK(r.r_b < 1e-6);
}

TEST_CASE("pde residual in the plain Morse limit") {
  const SystemParameters p(1.0, 0.0, 1.0, 0.0, 0.5);
  const SolutionCoefficients c = coefficients(p, beta3_forward(p));
  const EnergySpectrum e = spectrum(p, c);
  for (double x = -1.0; x <= 3.0; x += 0.25) {
    const oracle::PdeResidual r =
        oracle::pde_residual(p, 0.0, c, e, {x, 0.0}, 1e-4);
    CHECK(r.r_a < 1e-6);
    CHECK(r.r_b < 1e-6);
  }
}

TEST_CASE("E_r enters the second equation as a pure shift") {
  const GoldenSolution s = solve_golden();
  const PhasePoint pt{0.3, -0.2};
  const oracle::PdeResidual base =
      oracle::pde_residual(golden, s.voi, s.c, s.e, pt, 1e-4);
  EnergySpectrum shifted = s.e;
  shifted.E_r += 1e-3;
  const oracle::PdeResidual pert =
      oracle::pde_residual(golden, s.voi, s.c, shifted, pt, 1e-4);
  // The growth equals delta up to twice the baseline truncation residual.
  CHECK(base.r_b < 1e-8);
  CHECK(std::abs((pert.r_b - base.r_b) - 1e-3) < 2e-8);
  // The first equation does not involve E_r.
  CHECK(pert.r_a == doctest::Approx(base.r_a).epsilon(1e-12));
}

TEST_CASE("central differences converge at second order") {
  oracle::SplitRng rng(51);
  for (int k = 0; k < 10; ++k) {
    const SystemParameters p = oracle::draw_valid_params(rng);
    const double voi = voi_constraint(p);
    const SolutionCoefficients c = coefficients(p, beta3_forward(p));
    const EnergySpectrum e = spectrum(p, c);
    oracle::GridSpec g = oracle::default_grid(p);
    g.nx = 11;
    g.np = 11;
    const auto rep = oracle::grid_report(p, voi, c, e, g);
    oracle::GridSpec gh = g;
    gh.h *= 0.5;
    const auto rep_half = oracle::grid_report(p, voi, c, e, gh);
    const double ratio = rep.max_scaled / rep_half.max_scaled;
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
  }
}

TEST_CASE("cauchy-riemann residuals of the closed form") {
  const GoldenSolution s = solve_golden();
  for (const PhasePoint pt : {PhasePoint{0.5, 0.5}, PhasePoint{0.0, 0.0}}) {
    const auto r = oracle::cr_residual(golden, s.c, s.N, pt, 1e-4);
    CHECK(r[0] < 1e-6);
    CHECK(r[1] < 1e-6);
  }
}

TEST_CASE("cauchy-riemann negative control") {
  // Swapping alpha1/beta1 consistently in both phase functions keeps the
  // field analytic, so the corruption swaps them in the imaginary phase only.
  const GoldenSolution s = solve_golden();
  auto corrupted = [&](long double x1, long double p2) {
    const auto good = phase_functions<long double>(golden, s.c, x1, p2);
    const SolutionCoefficients swapped{s.c.beta1, s.c.alpha1, s.c.beta3};
    const auto bad = phase_functions<long double>(golden, swapped, x1, p2);
    const long double env = static_cast<long double>(s.N) * std::exp(-bad.second);
    return std::pair<long double, long double>{env * std::cos(good.first),
                                               env * std::sin(good.first)};
  };
  const double floor = s.N * (std::abs(s.c.alpha1) + std::abs(s.c.beta1));
  const auto r = oracle::cr_residual_of(corrupted, {0.5, 0.5}, 1e-4, floor);
  CHECK(std::max(r[0], r[1]) > 1e-2);

  // And the consistent swap stays analytic, as a cross-check of the control.
  const SolutionCoefficients swapped{s.c.beta1, s.c.alpha1, s.c.beta3};
  const auto ok = oracle::cr_residual(golden, swapped, s.N, {0.5, 0.5}, 1e-4);
  CHECK(std::max(ok[0], ok[1]) < 1e-6);
}

TEST_CASE("coefficient residuals: golden case and constructed corruptions") {
  const GoldenSolution s = solve_golden();
  const auto res = oracle::coefficient_residuals(golden, s.voi, s.c, s.e);
  for (int i = 0; i < 6; ++i) CHECK(res.residual[i] / res.scale[i] < 1e-12);

  // Perturbing beta3 breaks the quadratic-depth relations.
  SolutionCoefficients cpert = s.c;
  cpert.beta3 += 1e-3;
  const auto pert = oracle::coefficient_residuals(golden, s.voi, cpert, s.e);
  CHECK(pert.residual[4] > 1e-4);
  CHECK(pert.residual[5] > 1e-4);

  // Zeroing the imaginary depth when the constraint demands 2 leaves a
  // residual of exactly that size.
  const auto zeroed = oracle::coefficient_residuals(golden, 0.0, s.c, s.e);
  CHECK(zeroed.residual[3] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(zeroed.residual[4] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("quadrature reproduces the analytic normalization") {
  CHECK(oracle::quadrature_norm({1.5, 2.5, 0.0}) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(oracle::quadrature_norm({1.0, 1.0, 0.0}) ==
        doctest::Approx(1.0).epsilon(1e-8));
  CHECK_THROWS_AS(oracle::quadrature_norm({-1.0, 1.0, 0.0}), NotNormalizable);

  oracle::SplitRng rng(52);
  for (int k = 0; k < 50; ++k) {
    const double a = rng.uniform(0.05, 20.0);
    CHECK(oracle::integrate_exp_abs(a) ==
          doctest::Approx(1.0 / a).epsilon(1e-8));
  }
}

TEST_CASE("full-plane tensor quadrature of the density") {
  const GoldenSolution s = solve_golden();
  auto rho = [&](double x, double p) {
    return probability_density(s.c, {x, p});
  };
  const double Lx = 9.0 / s.c.alpha1, Lp = 9.0 / s.c.beta1;
  CHECK(oracle::integrate_density_2d(rho, Lx, Lp) ==
        doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("grid residuals stay small across random valid draws") {
  oracle::SplitRng rng(53);
  for (int k = 0; k < 20; ++k) {
    const SystemParameters p = oracle::draw_valid_params(rng);
    const double voi = voi_constraint(p);
    const SolutionCoefficients c = coefficients(p, beta3_forward(p));
    const EnergySpectrum e = spectrum(p, c);
    const auto rep = oracle::grid_report(p, voi, c, e, oracle::default_grid(p));
    CHECK(rep.max_scaled < 1e-5);
    CHECK(rep.cr_residual_pair[0] < 1e-6);
    CHECK(rep.cr_residual_pair[1] < 1e-6);
  }
}
