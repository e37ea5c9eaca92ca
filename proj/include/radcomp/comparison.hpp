#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radcomp/weighted.hpp"

namespace radcomp {

// K for a check comes either from density bounds (K = e^{-2a}(1+c)) or from
// a direct override; the equality examples use K as a warp exponent
// decoupled from the (a, c) hypotheses.
struct ComparisonSpec {
  std::optional<DensityBounds> bounds;
  std::optional<double> k_override;

  double K() const;
  double c() const { return bounds ? bounds->c : 0.0; }
};

// Result of checking a <= phi <= 0, r|grad phi| <= c, and min weighted sec
// >= 0 on the same grid as an inequality check. Computed independently of
// the inequality's pass/fail.
struct HypothesisStatus {
  double phi_min = 0.0;
  double phi_max = 0.0;
  double max_r_grad_phi = 0.0;
  double min_weighted_sec = 0.0;
  bool bounds_checked = false;  // false when the check ran with a K override
  bool phi_in_range = true;
  bool grad_bound_holds = true;
  bool sec_nonnegative = true;

  bool all_hold() const {
    return phi_in_range && grad_bound_holds && sec_nonnegative;
  }
};

// Per-check result: slack = RHS - LHS at every grid point; pass means
// min slack >= -tolerance.
struct GapReport {
  std::string name;
  std::vector<GridPoint> grid;
  std::vector<double> slack;
  double min_slack = 0.0;
  GridPoint argmin;
  double tolerance = 1e-9;
  bool pass = false;
  HypothesisStatus hypothesis;
};

HypothesisStatus check_hypotheses(const ManifoldModel& model,
                                  const ComparisonSpec& spec,
                                  const std::vector<GridPoint>& grid,
                                  int psi_samples = 32);

// MHess(r^2/2) <= K g: slack = K - max eigenvalue of mhess_u.
GapReport check_mhess_bound(const ManifoldModel& model,
                            const ComparisonSpec& spec,
                            const std::vector<GridPoint>& grid,
                            double tol = 1e-9);

// Conformal variant MCHess(r^2/2) <= K gt with gt = e^{-2 phi} g and the
// a-free constant K = 1 + c.
GapReport check_conformal_mhess_bound(const ManifoldModel& model, double c,
                                      const std::vector<GridPoint>& grid,
                                      double tol = 1e-9);

// Tangential inequality Hess r - phi_r g_r <= e^{-2 phi} (1/r) g_r,
// checked as a standalone inequality.
GapReport check_kwy_radial_inequality(const ManifoldModel& model,
                                      const std::vector<GridPoint>& grid,
                                      double tol = 1e-9);

// Hess r <= (K/r + phi_r) on unit tangential directions.
GapReport check_hessian_comparison(const ManifoldModel& model,
                                   const ComparisonSpec& spec,
                                   const std::vector<GridPoint>& grid,
                                   double tol = 1e-9);

// Tangential eigenvalue of the weighted shape operator S - phi_r I.
double weighted_shape_operator(const ManifoldModel& model, double r,
                               double theta = 0.0);

// S - phi_r I <= (K/r) I on tangential directions.
GapReport check_shape_comparison(const ManifoldModel& model,
                                 const ComparisonSpec& spec,
                                 const std::vector<GridPoint>& grid,
                                 double tol = 1e-9);

// Delta r <= (n-1)(K/r + phi_r); slack is (n-1) times the Hessian slack.
GapReport check_laplacian_comparison(const ManifoldModel& model,
                                     const ComparisonSpec& spec,
                                     const std::vector<GridPoint>& grid,
                                     double tol = 1e-9);

// Delta_phi r <= (n-1)K/r + (n-2)phi_r. When r|phi_r| <= c holds on the
// grid the second form (n-1)K/r + (n-2)c/r is evaluated as well and the
// smaller slack of the two is reported per point in `slack2`.
struct WeightedLaplacianReport {
  GapReport primary;
  std::vector<double> slack2;  // empty when the c-form was not applicable
};
WeightedLaplacianReport check_weighted_laplacian_comparison(
    const ManifoldModel& model, const ComparisonSpec& spec,
    const std::vector<GridPoint>& grid, double tol = 1e-9);

// Grid of (r, theta) samples: theta is suppressed for radial densities and
// sweeps [0, 2 pi) for n = 2 non-radial densities.
std::vector<GridPoint> make_grid(const ManifoldModel& model, double r_lo,
                                 double r_hi, int steps,
                                 int theta_samples = 64);

}  // namespace radcomp
