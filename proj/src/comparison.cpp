#include "radcomp/comparison.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace radcomp {

namespace {

GapReport build_report(
    std::string name, const std::vector<GridPoint>& grid,
    const std::function<double(const GridPoint&)>& slack_at, double tol,
    HypothesisStatus hyp) {
  if (grid.empty()) throw std::invalid_argument(name + ": empty grid");
  GapReport rep;
  rep.name = std::move(name);
  rep.grid = grid;
  rep.tolerance = tol;
  rep.hypothesis = hyp;
  rep.slack.reserve(grid.size());
  bool first = true;
  for (const auto& p : grid) {
    const double s = slack_at(p);
    rep.slack.push_back(s);
    if (first || s < rep.min_slack) {
      rep.min_slack = s;
      rep.argmin = p;
      first = false;
    }
  }
  rep.pass = rep.min_slack >= -tol;
  return rep;
}

}  // namespace

double ComparisonSpec::K() const {
  if (k_override) return *k_override;
  if (bounds) return bounds->K();
  throw std::invalid_argument("comparison spec carries neither bounds nor K");
}

HypothesisStatus check_hypotheses(const ManifoldModel& model,
                                  const ComparisonSpec& spec,
                                  const std::vector<GridPoint>& grid,
                                  int psi_samples) {
  if (grid.empty()) throw std::invalid_argument("check_hypotheses: empty grid");
  HypothesisStatus st;
  bool first = true;
  for (const auto& p : grid) {
    const DensityJet d = model.density(p.r, p.theta);
    const WarpJet w = model.warp(p.r);
    const double grad =
        std::hypot(d.phi_r, model.radial_density() ? 0.0 : d.phi_th / w.f);
    if (first) {
      st.phi_min = st.phi_max = d.phi;
      first = false;
    }
    st.phi_min = std::min(st.phi_min, d.phi);
    st.phi_max = std::max(st.phi_max, d.phi);
    st.max_r_grad_phi = std::max(st.max_r_grad_phi, p.r * grad);
  }
  st.min_weighted_sec = min_weighted_sec(model, grid, psi_samples).value;
  st.sec_nonnegative = st.min_weighted_sec >= -1e-12;
  if (spec.bounds) {
    st.bounds_checked = true;
    st.phi_in_range =
        st.phi_min >= spec.bounds->a - 1e-12 && st.phi_max <= 1e-12;
    st.grad_bound_holds = st.max_r_grad_phi <= spec.bounds->c + 1e-12;
  } else {
    st.phi_in_range = st.phi_max <= 1e-12;
  }
  return st;
}

GapReport check_mhess_bound(const ManifoldModel& model,
                            const ComparisonSpec& spec,
                            const std::vector<GridPoint>& grid, double tol) {
  const double K = spec.K();
  const auto hyp = check_hypotheses(model, spec, grid);
  return build_report(
      "mhess_bound", grid,
      [&](const GridPoint& p) {
        const RadialTensorEigen m = mhess_u(model, p.r, p.theta);
        return K - std::max(m.radial, m.tangential);
      },
      tol, hyp);
}

GapReport check_conformal_mhess_bound(const ManifoldModel& model, double c,
                                      const std::vector<GridPoint>& grid,
                                      double tol) {
  ComparisonSpec spec;
  // Prop-3.3-style hypotheses: phi <= 0 and the c-bound, no lower bound a.
  spec.bounds = DensityBounds{-std::numeric_limits<double>::infinity(), c};
  const double K = 1.0 + c;  // a-free branch of the max
  const auto hyp = check_hypotheses(model, spec, grid);
  return build_report(
      "conformal_mhess_bound", grid,
      [&](const GridPoint& p) {
        const RadialTensorEigen m = mchess_u_via_conformal(model, p.r, p.theta);
        const double conformal_scale =
            std::exp(-2.0 * model.density(p.r, p.theta).phi);
        return K * conformal_scale - std::max(m.radial, m.tangential);
      },
      tol, hyp);
}

GapReport check_kwy_radial_inequality(const ManifoldModel& model,
                                      const std::vector<GridPoint>& grid,
                                      double tol) {
  ComparisonSpec spec;  // standalone inequality, no constants involved
  const auto hyp = check_hypotheses(model, spec, grid);
  return build_report(
      "kwy_radial_inequality", grid,
      [&](const GridPoint& p) {
        const WarpJet w = model.warp(p.r);
        const DensityJet d = model.density(p.r, p.theta);
        return std::exp(-2.0 * d.phi) / p.r - (w.fp / w.f - d.phi_r);
      },
      tol, hyp);
}

GapReport check_hessian_comparison(const ManifoldModel& model,
                                   const ComparisonSpec& spec,
                                   const std::vector<GridPoint>& grid,
                                   double tol) {
  const double K = spec.K();
  const auto hyp = check_hypotheses(model, spec, grid);
  return build_report(
      "hessian_comparison", grid,
      [&](const GridPoint& p) {
        const WarpJet w = model.warp(p.r);
        const DensityJet d = model.density(p.r, p.theta);
        return (K / p.r + d.phi_r) - w.fp / w.f;
      },
      tol, hyp);
}

double weighted_shape_operator(const ManifoldModel& model, double r,
                               double theta) {
  const WarpJet w = model.warp(r);
  return w.fp / w.f - model.density(r, theta).phi_r;
}

GapReport check_shape_comparison(const ManifoldModel& model,
                                 const ComparisonSpec& spec,
                                 const std::vector<GridPoint>& grid,
                                 double tol) {
  const double K = spec.K();
  const auto hyp = check_hypotheses(model, spec, grid);
  return build_report(
      "shape_comparison", grid,
      [&](const GridPoint& p) {
        return K / p.r - weighted_shape_operator(model, p.r, p.theta);
      },
      tol, hyp);
}

GapReport check_laplacian_comparison(const ManifoldModel& model,
                                     const ComparisonSpec& spec,
                                     const std::vector<GridPoint>& grid,
                                     double tol) {
  const double K = spec.K();
  const int m = model.dimension() - 1;
  const auto hyp = check_hypotheses(model, spec, grid);
  return build_report(
      "laplacian_comparison", grid,
      [&](const GridPoint& p) {
        const WarpJet w = model.warp(p.r);
        const DensityJet d = model.density(p.r, p.theta);
        return m * ((K / p.r + d.phi_r) - w.fp / w.f);
      },
      tol, hyp);
}

WeightedLaplacianReport check_weighted_laplacian_comparison(
    const ManifoldModel& model, const ComparisonSpec& spec,
    const std::vector<GridPoint>& grid, double tol) {
  const double K = spec.K();
  const double c = spec.c();
  const int n = model.dimension();
  const auto hyp = check_hypotheses(model, spec, grid);
  WeightedLaplacianReport out;
  out.primary = build_report(
      "weighted_laplacian_comparison", grid,
      [&](const GridPoint& p) {
        const double lhs = weighted_laplacian_r(model, p.r, p.theta);
        const DensityJet d = model.density(p.r, p.theta);
        return (n - 1) * K / p.r + (n - 2) * d.phi_r - lhs;
      },
      tol, hyp);
  if (spec.bounds && hyp.grad_bound_holds) {
    out.slack2.reserve(grid.size());
    for (const auto& p : grid) {
      const double lhs = weighted_laplacian_r(model, p.r, p.theta);
      out.slack2.push_back(((n - 1) * K + (n - 2) * c) / p.r - lhs);
    }
  }
  return out;
}

std::vector<GridPoint> make_grid(const ManifoldModel& model, double r_lo,
                                 double r_hi, int steps, int theta_samples) {
  if (steps < 3) throw std::invalid_argument("make_grid: need >= 3 steps");
  std::vector<GridPoint> grid;
  const bool sweep_theta = !model.radial_density() && model.dimension() == 2;
  const int nt = sweep_theta ? theta_samples : 1;
  grid.reserve((std::size_t)steps * nt);
  for (int i = 0; i < steps; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / (steps - 1);
    for (int j = 0; j < nt; ++j)
      grid.push_back({r, sweep_theta ? 2.0 * M_PI * j / nt : 0.0});
  }
  return grid;
}

}  // namespace radcomp
