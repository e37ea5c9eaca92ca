#include "radcomp/volume.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "radcomp/quadrature.hpp"
#include "radcomp/weighted.hpp"

namespace radcomp {

namespace {

double pow_int(double x, int k) { return std::pow(x, k); }

void require_no_conjugate_point(const ManifoldModel& model, double R) {
  for (int i = 1; i <= 64; ++i) {
    const double r = R * i / 64.0;
    if (model.warp(r).f <= 0.0)
      throw std::domain_error("conjugate point before R = " + std::to_string(R));
  }
}

}  // namespace

double unit_sphere_area(int n) {
  if (n < 2) throw std::invalid_argument("unit_sphere_area: n must be >= 2");
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n);
}

double radial_density(const ManifoldModel& model, double r, double) {
  const double f = model.warp(r).f;
  if (f <= 0.0)
    throw std::domain_error("radial density degenerate at r = " + std::to_string(r));
  return pow_int(f, model.dimension() - 1);
}

GapReport check_log_derivative_identity(const ManifoldModel& model,
                                        const std::vector<GridPoint>& grid,
                                        double fd_step, double tol) {
  if (grid.empty())
    throw std::invalid_argument("check_log_derivative_identity: empty grid");
  GapReport rep;
  rep.name = "log_derivative_identity";
  rep.grid = grid;
  rep.tolerance = tol;
  bool first = true;
  for (const auto& p : grid) {
    const double lo = std::log(radial_density(model, p.r - fd_step));
    const double hi = std::log(radial_density(model, p.r + fd_step));
    const double fd = (hi - lo) / (2.0 * fd_step);
    const double dev = std::abs(fd - laplacian_r(model, p.r));
    rep.slack.push_back(-dev);
    if (first || -dev < rep.min_slack) {
      rep.min_slack = -dev;
      rep.argmin = p;
      first = false;
    }
  }
  rep.pass = rep.min_slack >= -tol;
  return rep;
}

DensityBoundReport check_density_upper_bound(const ManifoldModel& model,
                                             const ComparisonSpec& spec,
                                             double r0,
                                             const std::vector<GridPoint>& grid,
                                             double tol) {
  if (grid.empty())
    throw std::invalid_argument("check_density_upper_bound: empty grid");
  if (!(r0 > 0.0) || r0 > model.r_max())
    throw std::invalid_argument("check_density_upper_bound: r0 outside domain");
  const double K = spec.K();
  const int m = model.dimension() - 1;
  DensityBoundReport out;
  out.primary.name = "density_upper_bound";
  out.primary.grid = grid;
  out.primary.tolerance = tol;
  out.primary.hypothesis = check_hypotheses(model, spec, grid);
  bool first = true;
  for (const auto& p : grid) {
    const double a0 = radial_density(model, r0);
    const double phi0 = model.density(r0, p.theta).phi;
    const double phi = model.density(p.r, p.theta).phi;
    const double a_here = radial_density(model, p.r);
    const double c_const = a0 * std::pow(r0, -m * K) * std::exp(-m * phi0);
    const double slack = c_const * std::pow(p.r, m * K) - a_here;
    const double sharp =
        a0 * std::pow(p.r / r0, m * K) * std::exp(m * (phi - phi0)) - a_here;
    out.primary.slack.push_back(slack);
    out.sharp_slack.push_back(sharp);
    if (first || slack < out.primary.min_slack) {
      out.primary.min_slack = slack;
      out.primary.argmin = p;
      first = false;
    }
  }
  out.primary.pass = out.primary.min_slack >= -tol;
  return out;
}

VolumeResult ball_volume(const ManifoldModel& model, double R,
                         double quad_tol) {
  if (R <= 0.0 || R > model.r_max())
    throw std::invalid_argument("ball_volume: R outside domain");
  require_no_conjugate_point(model, R);
  const int m = model.dimension() - 1;
  const QuadResult q = adaptive_simpson(
      [&](double r) { return pow_int(model.warp(r).f, m); }, 0.0, R, quad_tol);
  return {R, unit_sphere_area(model.dimension()) * q.value, "quadrature",
          q.error_estimate};
}

VolumeResult weighted_ball_volume(const ManifoldModel& model, double R,
                                  double quad_tol, int theta_nodes) {
  if (R <= 0.0 || R > model.r_max())
    throw std::invalid_argument("weighted_ball_volume: R outside domain");
  require_no_conjugate_point(model, R);
  const int m = model.dimension() - 1;
  VolumeResult out{R, 0.0, "quadrature", 0.0};
  // Log-type densities are unbounded at the origin; the integrand still
  // tends to 0 there whenever the weighted volume is finite.
  const auto guarded = [](double v) { return std::isfinite(v) ? v : 0.0; };
  if (model.radial_density()) {
    const QuadResult q = adaptive_simpson(
        [&](double r) {
          if (r <= 0.0) return 0.0;
          return guarded(std::exp(-model.density(r).phi) *
                         pow_int(model.warp(r).f, m));
        },
        0.0, R, quad_tol);
    out.value = unit_sphere_area(model.dimension()) * q.value;
    out.quadrature_error = q.error_estimate;
  } else {
    // n = 2 general density: composite trapezoid over the periodic angle.
    double sum = 0.0;
    for (int j = 0; j < theta_nodes; ++j) {
      const double theta = 2.0 * M_PI * j / theta_nodes;
      const QuadResult q = adaptive_simpson(
          [&](double r) {
            if (r <= 0.0) return 0.0;
            return guarded(std::exp(-model.density(r, theta).phi) *
                           pow_int(model.warp(r).f, m));
          },
          0.0, R, quad_tol);
      sum += q.value;
      out.quadrature_error += q.error_estimate;
    }
    out.value = sum * 2.0 * M_PI / theta_nodes;
  }
  return out;
}

double fit_growth_exponent(const ManifoldModel& model,
                           const std::vector<double>& R_grid) {
  if (R_grid.size() < 3)
    throw std::invalid_argument("fit_growth_exponent: need >= 3 radii");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double R : R_grid) {
    const double x = std::log(R);
    const double y = std::log(ball_volume(model, R).value);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = (double)R_grid.size();
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double normalized_density(const ManifoldModel& model, double K, double r,
                          double theta) {
  const int m = model.dimension() - 1;
  const double phi = model.density(r, theta).phi;
  return radial_density(model, r, theta) /
         (std::pow(r, m * K) * std::exp(m * phi));
}

MonotonicityReport check_normalized_monotonicity(
    const ManifoldModel& model, const ComparisonSpec& spec,
    const std::vector<GridPoint>& grid, double tol) {
  if (grid.empty())
    throw std::invalid_argument("check_normalized_monotonicity: empty grid");
  const double K = spec.K();
  const int m = model.dimension() - 1;
  MonotonicityReport out;
  out.primary.name = "normalized_monotonicity";
  out.primary.grid = grid;
  out.primary.tolerance = tol;
  out.primary.hypothesis = check_hypotheses(model, spec, grid);
  bool first = true;
  for (const auto& p : grid) {
    const WarpJet w = model.warp(p.r);
    const DensityJet d = model.density(p.r, p.theta);
    // slack = -d/dr log At, written with the exact same expression as the
    // Laplacian-comparison slack so the two agree bit for bit.
    const double slack = m * ((K / p.r + d.phi_r) - w.fp / w.f);
    out.primary.slack.push_back(slack);
    // Pass is gated on the points where the Laplacian comparison holds.
    if (slack >= -tol && (first || slack < out.primary.min_slack)) {
      out.primary.min_slack = slack;
      out.primary.argmin = p;
      first = false;
    }
  }
  if (first && !out.primary.slack.empty()) {
    // Laplacian comparison failed everywhere; report the raw minimum.
    out.primary.min_slack = out.primary.slack.front();
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (out.primary.slack[i] < out.primary.min_slack) {
        out.primary.min_slack = out.primary.slack[i];
        out.primary.argmin = grid[i];
      }
    out.primary.pass = false;
  } else {
    out.primary.pass = true;
  }

  // Finite-difference guard for the closed-form derivative.
  std::mt19937 rng(42);
  const double r_lo = grid.front().r, r_hi = grid.back().r;
  std::uniform_real_distribution<double> pick(r_lo + 1e-3, r_hi - 1e-3);
  const double h = 1e-5;
  for (int k = 0; k < 32; ++k) {
    const double r = pick(rng);
    const double fd = (std::log(normalized_density(model, K, r + h)) -
                       std::log(normalized_density(model, K, r - h))) /
                      (2.0 * h);
    const WarpJet w = model.warp(r);
    const DensityJet d = model.density(r, 0.0);
    const double closed = m * (w.fp / w.f - K / r - d.phi_r);
    out.fd_crosscheck_max_dev =
        std::max(out.fd_crosscheck_max_dev, std::abs(fd - closed));
  }
  return out;
}

}  // namespace radcomp
