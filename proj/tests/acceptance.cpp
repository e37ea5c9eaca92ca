// End-to-end acceptance gate: one line per criterion, nonzero exit if any
// fails. Tolerances are pinned here on purpose; loosening them is a red flag.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "radcomp/comparison.hpp"
#include "radcomp/radial.hpp"
#include "radcomp/rigidity.hpp"
#include "radcomp/volume.hpp"
#include "test_helpers.hpp"

using namespace radcomp;
using namespace radcomp::testing;

namespace {

int g_failures = 0;

void report(int idx, const char* label, bool ok, double worst = 0.0) {
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %2d: %s (worst deviation %.3e)\n",
              ok ? "PASS" : "FAIL", idx, label, worst);
}

ComparisonSpec with_bounds(double a, double c) {
  ComparisonSpec spec;
  spec.bounds = DensityBounds{a, c};
  return spec;
}

ComparisonSpec with_k(double K) {
  ComparisonSpec spec;
  spec.k_override = K;
  return spec;
}

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// 1. Both Hessian routes give the identity tensor on flat space.
void criterion_1() {
  double worst = 0.0;
  for (int n : {2, 3, 5}) {
    const ManifoldModel m = euclidean(n);
    for (double r = 0.1; r <= 10.0; r += 0.1) {
      for (const RadialTensorEigen e :
           {mhess_u(m, r), mchess_u_via_conformal(m, r)}) {
        worst = std::max(worst, std::abs(e.radial - 1.0));
        worst = std::max(worst, std::abs(e.tangential - 1.0));
        worst = std::max(worst, std::abs(e.mixed_rtheta));
      }
    }
  }
  report(1, "modified Hessian of r^2/2 is the identity on flat space",
         worst <= 1e-10, worst);
}

// 2. Riccati solutions on cones are K/r and the comparison slacks vanish.
void criterion_2() {
  double worst = 0.0;
  const auto r_grid = linspace(0.2, 10.0, 50);
  for (double K : {0.5, 1.0, 2.0}) {
    const ManifoldModel m = cone(K);
    const RadialSeries s = integrate_riccati(m, r_grid);
    for (std::size_t i = 0; i < r_grid.size(); ++i)
      worst = std::max(worst, std::abs(s.values[i] - K / r_grid[i]) /
                                  (K / r_grid[i]));
  }
  bool ok = worst <= 1e-6;
  double worst_slack = 0.0;
  const auto grid = make_grid(euclidean(), 0.2, 10.0, 60);
  for (double K : {0.5, 1.0, 2.0}) {
    const ManifoldModel m = cone(K);
    const ComparisonSpec spec = with_k(K);
    std::vector<GapReport> reps = {check_hessian_comparison(m, spec, grid),
                                   check_shape_comparison(m, spec, grid),
                                   check_laplacian_comparison(m, spec, grid)};
    if (K >= 1.0) reps.push_back(check_mhess_bound(m, spec, grid));
    for (const GapReport& rep : reps) {
      ok = ok && rep.pass;
      worst_slack = std::max(worst_slack, std::abs(rep.min_slack));
    }
  }
  ok = ok && worst_slack <= 1e-9;
  report(2, "cone Riccati solutions are K/r with vanishing comparison slack",
         ok, std::max(worst, worst_slack));
}

// 3. Jacobi determinant reproduces f^{n-1} across warp families.
void criterion_3() {
  double worst = 0.0;
  for (int n : {2, 3}) {
    struct Case {
      ManifoldModel model;
      double r_hi;
      double (*f)(double);
    };
    const Case cases[] = {
        {euclidean(n), 8.0, [](double r) { return r; }},
        {cone(2.0, n), 8.0, [](double r) { return r * r; }},
        {sphere_warp(n, 3.0), 2.8, [](double r) { return std::sin(r); }},
        {hyperbolic_warp(n, 6.0), 5.0, [](double r) { return std::sinh(r); }},
    };
    for (const Case& c : cases) {
      const auto grid = linspace(0.2, c.r_hi, 40);
      const JacobiSeries jac = integrate_jacobi(c.model, grid);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double want = std::pow(c.f(grid[i]), n - 1);
        worst = std::max(worst,
                         std::abs(jac.det_a.values[i] - want) / want);
      }
    }
  }
  report(3, "Jacobi determinant matches f^{n-1} for flat, cone, sin, sinh",
         worst <= 1e-6, worst);
}

// 4. d/dr log A equals the Laplacian of r against finite differences.
void criterion_4() {
  bool ok = true;
  double worst = 0.0;
  for (const ManifoldModel& m :
       {euclidean(), cone(2.0), hyperbolic_warp(3, 6.0)}) {
    const auto grid = make_grid(m, 0.25, 5.0, 60);
    const GapReport rep = check_log_derivative_identity(m, grid, 1e-4, 1e-5);
    ok = ok && rep.pass;
    worst = std::max(worst, -rep.min_slack);
  }
  report(4, "log-derivative of the volume density is the Laplacian of r", ok,
         worst);
}

// 5. Inequality chain: tangential MHess slack = r * Hessian slack = shape
//    slack * r, and the Laplacian slack is exactly (n-1) times it.
void criterion_5() {
  bool ok = true;
  double worst = 0.0;
  struct Case {
    ManifoldModel model;
    ComparisonSpec spec;
  };
  const Case cases[] = {
      {euclidean(), with_bounds(0.0, 0.0)},
      {bounded_density(1.0), with_bounds(-1.0, 0.25)},
      {cone(2.0), with_k(2.0)},
  };
  for (const Case& c : cases) {
    const auto grid = make_grid(c.model, 0.3, 5.0, 50);
    const double K = c.spec.K();
    const int m = c.model.dimension() - 1;
    const GapReport hess = check_hessian_comparison(c.model, c.spec, grid);
    const GapReport shape = check_shape_comparison(c.model, c.spec, grid);
    const GapReport lap = check_laplacian_comparison(c.model, c.spec, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double r = grid[i].r;
      const RadialTensorEigen mh = mhess_u(c.model, r, grid[i].theta);
      const double mhess_tan_slack = K - mh.tangential;
      worst = std::max(worst, std::abs(mhess_tan_slack - r * hess.slack[i]));
      worst = std::max(worst, std::abs(shape.slack[i] - hess.slack[i]));
      if (lap.slack[i] != m * hess.slack[i]) ok = false;
    }
  }
  ok = ok && worst <= 1e-12;
  report(5, "Hessian, shape, and Laplacian comparison slacks are one chain",
         ok, worst);
}

// 6. Monotonicity slack is bitwise the Laplacian slack; flat-space
//    normalized density is constant 1.
void criterion_6() {
  bool ok = true;
  double worst = 0.0;
  {
    const ManifoldModel m = bounded_density(1.0);
    const ComparisonSpec spec = with_bounds(-1.0, 0.25);
    const auto grid = make_grid(m, 0.5, 5.0, 50);
    const MonotonicityReport mono =
        check_normalized_monotonicity(m, spec, grid);
    const GapReport lap = check_laplacian_comparison(m, spec, grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (mono.primary.slack[i] != lap.slack[i]) ok = false;
    ok = ok && mono.primary.pass && mono.fd_crosscheck_max_dev < 1e-4;
    worst = mono.fd_crosscheck_max_dev;
  }
  for (double r = 0.5; r <= 10.0; r += 0.25) {
    const double dev = std::abs(normalized_density(euclidean(), 1.0, r) - 1.0);
    if (dev > 1e-10) ok = false;
    worst = std::max(worst, dev);
  }
  report(6, "normalized density decay rate is exactly the Laplacian slack",
         ok, worst);
}

// 7. Volumes: closed form, growth exponents, weighted sandwich.
void criterion_7() {
  bool ok = true;
  double worst = rel_err(ball_volume(euclidean(), 2.0).value,
                         33.5103216382911279);
  ok = ok && worst <= 1e-6;

  std::vector<double> R_grid;
  for (int i = 0; i <= 16; ++i)
    R_grid.push_back(std::pow(10.0, 2.0 * i / 16.0));  // [1, 100]
  const double fit3 = fit_growth_exponent(euclidean(3, 100.0), R_grid);
  const double fit5 = fit_growth_exponent(cone(2.0, 3, 100.0), R_grid);
  ok = ok && std::abs(fit3 - 3.0) <= 0.03 && std::abs(fit5 - 5.0) <= 0.05;
  worst = std::max({worst, std::abs(fit3 - 3.0) / 3.0,
                    std::abs(fit5 - 5.0) / 5.0});

  const ManifoldModel m = bounded_density(1.0);
  for (double R : {1.0, 2.0, 5.0}) {
    const double vol = ball_volume(m, R).value;
    const double wvol = weighted_ball_volume(m, R).value;
    if (wvol < vol - 1e-9 * vol || wvol > std::exp(1.0) * vol + 1e-9 * vol)
      ok = false;
  }
  report(7, "ball volumes: closed form, growth exponent fit, density sandwich",
         ok, worst);
}

// 8. Volume density upper bound A <= C r^{(n-1)K} out to r = 50.
void criterion_8() {
  const ManifoldModel m = bounded_density(1.0, 3, 50.0);
  const auto grid = make_grid(m, 1.0, 50.0, 200);
  const DensityBoundReport rep =
      check_density_upper_bound(m, with_bounds(-1.0, 0.25), 1.0, grid);
  bool ok = rep.primary.pass && rep.primary.min_slack >= -1e-9;
  double sharp_min = 0.0;
  for (double s : rep.sharp_slack) sharp_min = std::min(sharp_min, s);
  ok = ok && sharp_min >= -1e-9;
  report(8, "polynomial upper bound on the volume density out to r = 50", ok,
         std::min(rep.primary.min_slack, sharp_min));
}

// 9. Equality metric reconstruction: ODE vs r^{2K} e^{2 phi}, with
//    fourth-order step convergence.
void criterion_9() {
  bool ok = true;
  double worst = 0.0;
  const auto r_grid = linspace(0.5, 5.0, 40);
  const ManifoldModel decaying = bounded_density(1.0);
  const ManifoldModel::DensityFn zero = [](double, double) {
    return DensityJet{};
  };
  const ManifoldModel::DensityFn decay = [&decaying](double r, double th) {
    return decaying.density(r, th);
  };
  for (double K : {1.0, 2.0}) {
    for (const ManifoldModel::DensityFn& density : {zero, decay}) {
      const RigidityVerdict v =
          verify_conformal_rigidity(K, density, 1.0, r_grid);
      ok = ok && v.kind == RigidityKind::conformal_rigid;
      worst = std::max(worst, v.reconstruction_error);
    }
  }
  ok = ok && worst <= 1e-5;

  IntegratorConfig coarse, fine;
  coarse.h = 4e-3;
  fine.h = 1e-3;
  const double e_coarse =
      verify_conformal_rigidity(2.0, decay, 1.0, r_grid, 0.0, coarse)
          .reconstruction_error;
  const double e_fine =
      verify_conformal_rigidity(2.0, decay, 1.0, r_grid, 0.0, fine)
          .reconstruction_error;
  ok = ok && e_fine * 8.0 <= e_coarse;
  report(9, "conformal equality metric reconstructed from its evolution", ok,
         worst);
}

// 10. Conical equality: forced log density accepted, perturbation rejected,
//     and the equality rate is K-independent.
void criterion_10() {
  const auto grid = make_grid(euclidean(), 0.5, 5.0, 50);
  bool ok = true;
  double worst = 0.0;

  const RigidityVerdict good =
      conical_check(cone_with_log_density(0.5), 0.5, grid);
  ok = ok && good.kind == RigidityKind::conical_rigid &&
       good.max_deviation <= 1e-9;
  worst = std::max(worst, good.max_deviation);

  ModelSpec pert;
  pert.warp.kind = "perturbed";
  pert.warp.params["eps"] = 0.01;
  const RigidityVerdict bad = conical_check(
      build_model(pert), 1.0, make_grid(euclidean(), 0.5, 2.0, 30));
  ok = ok && bad.kind == RigidityKind::none && bad.max_deviation >= 1e-4;

  for (double K : {0.5, 1.0, 2.0}) {
    const RadialSeries gap =
        umbilicity_gap(cone_with_log_density(K), with_k(K), grid);
    for (double v : gap.values) {
      if (v > 1e-9) ok = false;
      worst = std::max(worst, v);
    }
  }
  report(10, "conical equality accepted, perturbations rejected, rate 1/r",
         ok, worst);
}

// 11. The comparison constant: normalization, lower bound, and s(r) >= r.
void criterion_11() {
  bool ok = comparison_constant(0.0, 0.0) == 1.0;
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> neg(-3.0, 0.0), pos(0.0, 3.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double a = neg(rng), c = pos(rng);
    const double K = comparison_constant(a, c);
    if (K < 1.0) ok = false;
    const double dev = rel_err(K, std::exp(-2.0 * a) * (1.0 + c));
    worst = std::max(worst, dev);
  }
  ok = ok && worst <= 1e-12;
  for (const ManifoldModel& m : {euclidean(), bounded_density(1.0)})
    for (int r = 1; r <= 10; ++r)
      if (reparam_distance(m, r) < r - 1e-12) ok = false;
  report(11, "comparison constant normalization and reparametrized distance",
         ok, worst);
}

// 12. Minimum weighted sectional curvature on the reference models.
void criterion_12() {
  const auto grid = make_grid(euclidean(), 0.2, 2.5, 40);
  const double flat = min_weighted_sec(euclidean(), grid).value;
  const double sph = min_weighted_sec(sphere_warp(3, 3.0), grid).value;
  const double hyp = min_weighted_sec(hyperbolic_warp(), grid).value;
  const double dens =
      min_weighted_sec(bounded_density(1.0),
                       make_grid(bounded_density(1.0), 0.2, 5.0, 40))
          .value;
  const double worst = std::max(
      {std::abs(flat), std::abs(sph - 1.0), std::abs(hyp + 1.0)});
  const bool ok = worst <= 1e-8 && dens < 0.0;
  report(12, "minimum weighted sectional curvature on the reference models",
         ok, worst);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 12 criteria passed\n");
  return 0;
}
