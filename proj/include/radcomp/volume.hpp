#pragma once

#include "radcomp/comparison.hpp"

namespace radcomp {

struct VolumeResult {
  double R = 0.0;
  double value = 0.0;
  std::string method;  // "closed-form" | "quadrature"
  double quadrature_error = 0.0;
};

// Surface area of the round unit sphere S^{n-1}.
double unit_sphere_area(int n);

// Radial volume density A(r, theta) = det A(r) = f(r)^{n-1}. Throws past
// the first conjugate point (f <= 0).
double radial_density(const ManifoldModel& model, double r,
                      double theta = 0.0);

// d/dr log A = Delta r, checked by central differences. slack = tol - |dev|
// would invert the convention; instead slack = -|deviation|, so pass means
// max deviation <= tolerance.
GapReport check_log_derivative_identity(const ManifoldModel& model,
                                        const std::vector<GridPoint>& grid,
                                        double fd_step = 1e-4,
                                        double tol = 1e-5);

// A(r, theta) <= C(r0, theta) r^{(n-1)K} for r >= r0, with
// C = A(r0) r0^{-(n-1)K} e^{-(n-1)phi(r0)}. `sharp_slack` carries the
// sharper pre-bound A(r0)(r/r0)^{(n-1)K} e^{(n-1)(phi(r)-phi(r0))} - A(r).
struct DensityBoundReport {
  GapReport primary;
  std::vector<double> sharp_slack;
};
DensityBoundReport check_density_upper_bound(const ManifoldModel& model,
                                             const ComparisonSpec& spec,
                                             double r0,
                                             const std::vector<GridPoint>& grid,
                                             double tol = 1e-9);

// vol(B_R) = vol(S^{n-1}) * integral of f^{n-1} over [0, R].
VolumeResult ball_volume(const ManifoldModel& model, double R,
                         double quad_tol = 1e-10);

// mu_phi(B_R) with integrand e^{-phi} f^{n-1}; the angular integral is the
// exact sphere-area factor for radial densities and a 64-node trapezoid for
// n = 2 general densities.
VolumeResult weighted_ball_volume(const ManifoldModel& model, double R,
                                  double quad_tol = 1e-10,
                                  int theta_nodes = 64);

// Least-squares slope of log vol(B_R) against log R.
double fit_growth_exponent(const ManifoldModel& model,
                           const std::vector<double>& R_grid);

// Normalized density At = A / (r^{(n-1)K} e^{(n-1) phi}).
double normalized_density(const ManifoldModel& model, double K, double r,
                          double theta = 0.0);

// d/dr log At = Delta r - (n-1)K/r - (n-1)phi_r <= 0 wherever the
// Laplacian comparison holds; slack = -d/dr log At, which equals the
// Laplacian-comparison slack exactly. A finite-difference cross-check of
// the closed-form derivative at 32 points guards the algebra.
struct MonotonicityReport {
  GapReport primary;
  double fd_crosscheck_max_dev = 0.0;
};
MonotonicityReport check_normalized_monotonicity(
    const ManifoldModel& model, const ComparisonSpec& spec,
    const std::vector<GridPoint>& grid, double tol = 1e-9);

}  // namespace radcomp
