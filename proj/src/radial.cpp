#include "radcomp/radial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace radcomp {

namespace {

template <std::size_t N>
using State = std::array<double, N>;

template <std::size_t N>
using Rhs = std::function<State<N>(double, const State<N>&)>;

template <std::size_t N>
State<N> axpy(const State<N>& y, double a, const State<N>& k) {
  State<N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + a * k[i];
  return out;
}

template <std::size_t N>
State<N> rk4_step(const Rhs<N>& f, double r, const State<N>& y, double h) {
  const State<N> k1 = f(r, y);
  const State<N> k2 = f(r + 0.5 * h, axpy(y, 0.5 * h, k1));
  const State<N> k3 = f(r + 0.5 * h, axpy(y, 0.5 * h, k2));
  const State<N> k4 = f(r + h, axpy(y, h, k3));
  State<N> out;
  for (std::size_t i = 0; i < N; ++i)
    out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
  return out;
}

template <std::size_t N>
bool exceeded(const State<N>& y, double guard) {
  for (double v : y)
    if (!std::isfinite(v) || std::abs(v) > guard) return true;
  return false;
}

// Marches from r_eps through out_grid with substeps of at most h, sampling
// component `comp` at every grid point. Runs at h and h/2; keeps the finer
// solution and reports the Richardson error estimate |y_h - y_{h/2}| / 15.
template <std::size_t N>
RadialSeries march(const Rhs<N>& f, const State<N>& seed,
                   const std::vector<double>& out_grid,
                   const IntegratorConfig& cfg, std::size_t comp,
                   RadialSeries* secondary = nullptr,
                   std::size_t secondary_comp = 0) {
  if (out_grid.empty()) throw std::invalid_argument("integration grid is empty");
  if (!(cfg.h > 0.0) || !(cfg.r_eps > 0.0))
    throw std::invalid_argument("integrator config: h and r_eps must be positive");
  for (std::size_t i = 1; i < out_grid.size(); ++i)
    if (!(out_grid[i] > out_grid[i - 1]))
      throw std::invalid_argument("integration grid must increase strictly");
  if (out_grid.front() < cfg.r_eps)
    throw std::invalid_argument("integration grid must start at or after r_eps");

  RadialSeries coarse, fine;
  for (RadialSeries* series : {&coarse, &fine}) {
    const double h_base = (series == &fine) ? 0.5 * cfg.h : cfg.h;
    const double scale = (series == &fine) ? 0.5 : 1.0;
    State<N> y = seed;
    double r = cfg.r_eps;
    bool blown = false;
    for (double target : out_grid) {
      if (blown) break;
      while (r < target) {
        // Cap the step at a fraction of the radius: the seeded equations
        // have O(1/r) solutions near the origin and a full-size step there
        // is outside the RK4 stability region.
        const double h =
            std::min(scale * std::min(h_base / scale, 0.05 * r), target - r);
        if (h <= 1e-15 * target) {
          r = target;
          break;
        }
        y = rk4_step(f, r, y, h);
        r += h;
        if (exceeded(y, cfg.blowup_guard)) {
          series->blowup_radius = r;
          blown = true;
          break;
        }
      }
      if (!blown) {
        series->grid.push_back(target);
        series->values.push_back(y[comp]);
        if (secondary && series == &fine) {
          secondary->grid.push_back(target);
          secondary->values.push_back(y[secondary_comp]);
        }
      }
    }
  }

  const std::size_t n = std::min(coarse.values.size(), fine.values.size());
  for (std::size_t i = 0; i < n; ++i)
    fine.error_estimate = std::max(
        fine.error_estimate, std::abs(coarse.values[i] - fine.values[i]) / 15.0);
  if (coarse.blowup_radius && !fine.blowup_radius)
    fine.blowup_radius = coarse.blowup_radius;
  return fine;
}

}  // namespace

double RadialSeries::at(double r) const {
  if (grid.empty()) throw std::domain_error("empty series");
  if (r <= grid.front()) return values.front();
  if (r >= grid.back()) return values.back();
  const auto it = std::upper_bound(grid.begin(), grid.end(), r);
  const std::size_t i = (std::size_t)(it - grid.begin()) - 1;
  const double t = (r - grid[i]) / (grid[i + 1] - grid[i]);
  return (1.0 - t) * values[i] + t * values[i + 1];
}

RadialSeries integrate_riccati(const ManifoldModel& model,
                               const std::vector<double>& out_grid,
                               const IntegratorConfig& cfg) {
  const WarpJet w0 = model.warp(cfg.r_eps);
  const State<1> seed{w0.f > 0.0 ? w0.fp / w0.f : 1.0 / cfg.r_eps};
  Rhs<1> rhs = [&model](double r, const State<1>& y) {
    const WarpJet w = model.warp(r);
    const double curv_rad = -w.fpp / w.f;  // eigenvalue of R(v, g')g'
    return State<1>{-y[0] * y[0] - curv_rad};
  };
  return march<1>(rhs, seed, out_grid, cfg, 0);
}

JacobiSeries integrate_jacobi(const ManifoldModel& model,
                              const std::vector<double>& out_grid,
                              const IntegratorConfig& cfg) {
  const WarpJet w0 = model.warp(cfg.r_eps);
  const State<2> seed{w0.f, w0.fp};
  Rhs<2> rhs = [&model](double r, const State<2>& y) {
    const WarpJet w = model.warp(r);
    return State<2>{y[1], (w.fpp / w.f) * y[0]};
  };
  JacobiSeries out;
  out.jp.theta = out.j.theta;
  out.j = march<2>(rhs, seed, out_grid, cfg, 0, &out.jp, 1);
  out.det_a.grid = out.j.grid;
  out.det_a.error_estimate = out.j.error_estimate;
  out.det_a.blowup_radius = out.j.blowup_radius;
  const int m = model.dimension() - 1;
  out.det_a.values.reserve(out.j.values.size());
  for (double j : out.j.values) out.det_a.values.push_back(std::pow(j, m));
  return out;
}

RadialSeries integrate_metric_evolution(
    const std::function<double(double)>& coefficient, double g0_scale,
    const std::vector<double>& out_grid, const IntegratorConfig& cfg) {
  if (out_grid.empty()) throw std::invalid_argument("integration grid is empty");
  IntegratorConfig anchored = cfg;
  anchored.r_eps = out_grid.front();
  const State<1> seed{g0_scale};
  Rhs<1> rhs = [&coefficient](double r, const State<1>& y) {
    return State<1>{2.0 * coefficient(r) * y[0]};
  };
  return march<1>(rhs, seed, out_grid, anchored, 0);
}

ConsistencyReport consistency_riccati_vs_jacobi(
    const ManifoldModel& model, const std::vector<double>& out_grid,
    const IntegratorConfig& cfg, double rel_tol) {
  const RadialSeries s = integrate_riccati(model, out_grid, cfg);
  const JacobiSeries jac = integrate_jacobi(model, out_grid, cfg);
  ConsistencyReport rep;
  const std::size_t n = std::min(s.values.size(), jac.j.values.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double logderiv = jac.jp.values[i] / jac.j.values[i];
    const double scale = std::max(1.0, std::abs(s.values[i]));
    const double dev = std::abs(logderiv - s.values[i]) / scale;
    if (dev > rep.max_deviation) {
      rep.max_deviation = dev;
      rep.arg_r = s.grid[i];
    }
  }
  rep.pass = rep.max_deviation < rel_tol;
  return rep;
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 2) throw std::invalid_argument("linspace: need >= 2 points");
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = lo + (hi - lo) * i / (count - 1);
  return out;
}

}  // namespace radcomp
