#pragma once

#include <vector>

#include "radcomp/models.hpp"

namespace radcomp {

// Rotationally symmetric symmetric 2-tensor in the radial frame
// {grad r, sphere directions}: one radial eigenvalue, one common tangential
// eigenvalue, and (n = 2 non-radial densities only) a mixed r-theta entry.
struct RadialTensorEigen {
  double radial = 0.0;
  double tangential = 0.0;
  double mixed_rtheta = 0.0;
};

// A 2-plane spanned by U = cos(psi) d_r + sin(psi) X and a second tangential
// leg, with psi in [0, pi/2]. The weighted sectional curvature is asymmetric
// in the ordered pair; u_is_mixed_leg selects which leg plays U.
struct PlaneSpec {
  double psi = 0.0;
  bool u_is_mixed_leg = true;
};

struct GridPoint {
  double r = 0.0;
  double theta = 0.0;
};

struct MinResult {
  double value = 0.0;
  double r = 0.0;
  double theta = 0.0;
  double psi = 0.0;
};

// Hess r: radial eigenvalue 0, tangential f'/f.
RadialTensorEigen hess_r(const ManifoldModel& model, double r);

// Hess phi(U,U) for the unit vector U = cos(psi) d_r + sin(psi) e_theta,
// from the warped-product Christoffel symbols.
double hess_density(const ManifoldModel& model, double r, double theta,
                    double psi);

// sec(U,V) + Hess phi(U,U) + dphi(U)^2 for the given plane.
double weighted_sec(const ManifoldModel& model, double r, double theta,
                    const PlaneSpec& plane);

// Minimum of weighted_sec over a grid of (r, theta, psi) samples, scanning
// both U-leg orientations.
MinResult min_weighted_sec(const ManifoldModel& model,
                           const std::vector<GridPoint>& grid,
                           int psi_samples = 32);

// MHess(r^2/2): radial 1 - r phi_r, tangential r f'/f - r phi_r.
RadialTensorEigen mhess_u(const ManifoldModel& model, double r,
                          double theta = 0.0);

// Same tensor computed by the conformal route: conformal Hessian of u for
// gt = e^{-2 phi} g, minus dphi (x) du + du (x) dphi, expressed back in the
// g-orthonormal frame. Agrees with mhess_u identically.
RadialTensorEigen mchess_u_via_conformal(const ManifoldModel& model, double r,
                                         double theta = 0.0);

// Delta r = (n-1) f'/f.
double laplacian_r(const ManifoldModel& model, double r);

// Delta_phi r = Delta r - phi_r.
double weighted_laplacian_r(const ManifoldModel& model, double r,
                            double theta = 0.0);

}  // namespace radcomp
