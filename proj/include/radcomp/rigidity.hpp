#pragma once

#include "radcomp/comparison.hpp"
#include "radcomp/radial.hpp"

namespace radcomp {

enum class RigidityKind { none, umbilic_equality, conformal_rigid, conical_rigid };

struct RigidityVerdict {
  RigidityKind kind = RigidityKind::none;
  double max_deviation = 0.0;
  GridPoint witness;
  // verify_conformal_rigidity: max relative error of the reconstructed
  // sphere-metric scale against the closed form r^{2K} e^{2 phi}.
  double reconstruction_error = 0.0;
};

const char* to_string(RigidityKind kind);

// Per-point |f'/f - (K/r + phi_r)|; identically zero iff equality holds in
// the Hessian comparison (totally umbilic spheres at the comparison rate).
RadialSeries umbilicity_gap(const ManifoldModel& model,
                            const ComparisonSpec& spec,
                            const std::vector<GridPoint>& grid);

// Integrates d/dr g_r = 2 (K/r + phi_r) g_r anchored at the first grid
// radius and compares against the rigid form r^{2K} e^{2 phi} g0_scale,
// normalized at the anchor.
RigidityVerdict verify_conformal_rigidity(
    double K, const ManifoldModel::DensityFn& density, double g0_scale,
    const std::vector<double>& r_grid, double theta = 0.0,
    const IntegratorConfig& cfg = {}, double tol = 1e-9);

// Equality in the modified Hessian estimate: checks the three residuals
// |1 - r phi_r - K|, |tangential MHess eigenvalue - K|, |f'/f - 1/r| and
// the forced density profile phi_r = (1 - K)/r.
RigidityVerdict conical_check(const ManifoldModel& model, double K,
                              const std::vector<GridPoint>& grid,
                              double tol = 1e-9);

// The density forced by conical rigidity: (1 - K) log r + F(theta).
// F is given as a uniform table over [0, 2 pi), linearly interpolated.
double cone_density_profile(double K, const std::vector<double>& f_values,
                            double r, double theta);

}  // namespace radcomp
