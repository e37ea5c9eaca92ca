#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "radcomp/models.hpp"

namespace radcomp {

// Fixed-step classical RK4 with a Richardson error estimate (second pass at
// half step). The Riccati equation is singular at r = 0, so integrations are
// seeded at r_eps.
struct IntegratorConfig {
  double h = 1e-3;
  double r_eps = 1e-3;
  double blowup_guard = 1e12;
};

// A sampled function of r along one radial direction.
struct RadialSeries {
  std::vector<double> grid;
  std::vector<double> values;
  double theta = 0.0;
  // Richardson estimate: max |y_h - y_{h/2}| / 15 over the grid.
  double error_estimate = 0.0;
  // Radius at which the integration hit the blow-up guard, if it did;
  // values past it are absent (grid is truncated).
  std::optional<double> blowup_radius;

  double at(double r) const;  // linear interpolation between grid samples
};

// Jacobi integration carries j, j' and det A = j^{n-1}.
struct JacobiSeries {
  RadialSeries j;
  RadialSeries jp;
  RadialSeries det_a;
};

struct ConsistencyReport {
  double max_deviation = 0.0;
  double arg_r = 0.0;
  bool pass = false;
};

// Integrates the scalar Riccati equation s' = -s^2 - R_rad(r), with
// R_rad = -f''/f, seeded by s(r_eps) = f'(r_eps)/f(r_eps). The result is
// the tangential shape-operator eigenvalue f'/f.
RadialSeries integrate_riccati(const ManifoldModel& model,
                               const std::vector<double>& out_grid,
                               const IntegratorConfig& cfg = {});

// Integrates the transverse Jacobi equation j'' = (f''/f) j seeded by
// j(r_eps) = f(r_eps), j'(r_eps) = f'(r_eps); det A = j^{n-1}.
JacobiSeries integrate_jacobi(const ManifoldModel& model,
                              const std::vector<double>& out_grid,
                              const IntegratorConfig& cfg = {});

// Integrates y' = 2 c(r) y from the first grid point with y = g0_scale.
// For c = K/r + phi_r the solution is the rigid sphere-metric scale
// r^{2K} e^{2 phi} up to the anchor normalization.
RadialSeries integrate_metric_evolution(
    const std::function<double(double)>& coefficient, double g0_scale,
    const std::vector<double>& out_grid, const IntegratorConfig& cfg = {});

// Checks j'/j = s across the shared grid (the Riccati solution is the
// logarithmic derivative of the Jacobi solution).
ConsistencyReport consistency_riccati_vs_jacobi(
    const ManifoldModel& model, const std::vector<double>& out_grid,
    const IntegratorConfig& cfg = {}, double rel_tol = 1e-6);

// Uniform grid helper: count points from lo to hi inclusive.
std::vector<double> linspace(double lo, double hi, int count);

}  // namespace radcomp
