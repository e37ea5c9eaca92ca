#include "radcomp/models.hpp"

#include <cmath>

#include "radcomp/quadrature.hpp"

namespace radcomp {

namespace {

double get_param(const std::map<std::string, double>& params,
                 const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

double require_param(const std::map<std::string, double>& params,
                     const std::string& key, const std::string& family) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument(family + ": missing parameter '" + key + "'");
  return it->second;
}

}  // namespace

ManifoldModel::ManifoldModel(int n, WarpFn warp, DensityFn density,
                             double r_min, double r_max, bool radial_density,
                             bool smooth_at_origin)
    : n_(n),
      warp_(std::move(warp)),
      density_(std::move(density)),
      r_min_(r_min),
      r_max_(r_max),
      radial_density_(radial_density),
      smooth_at_origin_(smooth_at_origin) {
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  if (!(r_min >= 0.0) || !(r_max > r_min))
    throw std::invalid_argument("radial domain must satisfy 0 <= r_min < r_max");
}

double comparison_constant(double a, double c) {
  if (a > 0.0) throw std::invalid_argument("comparison_constant: a must be <= 0");
  if (c < 0.0) throw std::invalid_argument("comparison_constant: c must be >= 0");
  return std::exp(-2.0 * a) * (1.0 + c);
}

double DensityBounds::K() const { return comparison_constant(a, c); }

ManifoldModel build_model(const ModelSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("model dimension must be >= 2");

  ManifoldModel::WarpFn warp;
  bool smooth_origin = true;
  const std::string& wk = spec.warp.kind;
  if (wk == "identity") {
    warp = [](double r) { return WarpJet{r, 1.0, 0.0}; };
  } else if (wk == "power") {
    const double K = require_param(spec.warp.params, "K", "power warp");
    if (K <= 0.0) throw std::invalid_argument("power warp: K must be > 0");
    warp = [K](double r) {
      return WarpJet{std::pow(r, K), K * std::pow(r, K - 1.0),
                     K * (K - 1.0) * std::pow(r, K - 2.0)};
    };
    smooth_origin = (K == 1.0);
  } else if (wk == "sin") {
    if (spec.r_max >= M_PI)
      throw std::invalid_argument("sin warp: domain must lie inside (0, pi)");
    warp = [](double r) { return WarpJet{std::sin(r), std::cos(r), -std::sin(r)}; };
  } else if (wk == "sinh") {
    warp = [](double r) { return WarpJet{std::sinh(r), std::cosh(r), std::sinh(r)}; };
  } else if (wk == "perturbed") {
    // f = r(1 + eps r), a multiplicative perturbation of the flat cone
    const double eps = get_param(spec.warp.params, "eps", 0.01);
    warp = [eps](double r) {
      return WarpJet{r * (1.0 + eps * r), 1.0 + 2.0 * eps * r, 2.0 * eps};
    };
  } else if (wk == "custom") {
    if (spec.warp.r_table.size() < 4 ||
        spec.warp.r_table.size() != spec.warp.f_table.size())
      throw std::invalid_argument("custom warp: need matching tables, >= 4 points");
    auto spline = std::make_shared<CubicSpline>(spec.warp.r_table, spec.warp.f_table);
    warp = [spline](double r) {
      return WarpJet{spline->value(r), spline->deriv(r), spline->deriv2(r)};
    };
    smooth_origin = false;
  } else {
    throw std::invalid_argument("unknown warp family '" + wk + "'");
  }

  ManifoldModel::DensityFn density;
  bool radial = true;
  const std::string& dk = spec.density.kind;
  if (dk == "zero") {
    density = [](double, double) { return DensityJet{}; };
  } else if (dk == "constant") {
    const double v = require_param(spec.density.params, "value", "constant density");
    density = [v](double, double) {
      DensityJet j;
      j.phi = v;
      return j;
    };
  } else if (dk == "bounded") {
    // phi(r) = -b/(1+r)
    const double b = require_param(spec.density.params, "b", "bounded density");
    if (b < 0.0) throw std::invalid_argument("bounded density: b must be >= 0");
    density = [b](double r, double) {
      DensityJet j;
      const double s = 1.0 + r;
      j.phi = -b / s;
      j.phi_r = b / (s * s);
      j.phi_rr = -2.0 * b / (s * s * s);
      return j;
    };
  } else if (dk == "cone_log") {
    // phi = (1-K) log r + F(theta), F(theta) = F0 + A sin(theta)
    const double K = require_param(spec.density.params, "K", "cone_log density");
    const double F0 = get_param(spec.density.params, "F_const", 0.0);
    const double A = get_param(spec.density.params, "F_sin_amp", 0.0);
    radial = (A == 0.0);
    density = [K, F0, A](double r, double theta) {
      DensityJet j;
      j.phi = (1.0 - K) * std::log(r) + F0 + A * std::sin(theta);
      j.phi_r = (1.0 - K) / r;
      j.phi_rr = -(1.0 - K) / (r * r);
      j.phi_th = A * std::cos(theta);
      j.phi_thth = -A * std::sin(theta);
      return j;
    };
  } else if (dk == "custom") {
    if (spec.density.r_table.size() < 4 ||
        spec.density.r_table.size() != spec.density.phi_table.size())
      throw std::invalid_argument("custom density: need matching tables, >= 4 points");
    auto spline =
        std::make_shared<CubicSpline>(spec.density.r_table, spec.density.phi_table);
    density = [spline](double r, double) {
      DensityJet j;
      j.phi = spline->value(r);
      j.phi_r = spline->deriv(r);
      j.phi_rr = spline->deriv2(r);
      return j;
    };
  } else {
    throw std::invalid_argument("unknown density family '" + dk + "'");
  }

  if (!radial && spec.n >= 3)
    throw std::invalid_argument("non-radial densities are supported only for n = 2");

  return ManifoldModel(spec.n, std::move(warp), std::move(density), spec.r_min,
                       spec.r_max, radial, smooth_origin);
}

double reparam_distance(const ManifoldModel& model, double r, double theta,
                        double abs_tol) {
  if (r < 0.0 || r > model.r_max())
    throw std::invalid_argument("reparam_distance: r outside domain");
  auto integrand = [&](double t) {
    return std::exp(-2.0 * model.density(t, theta).phi);
  };
  return adaptive_simpson(integrand, 0.0, r, abs_tol).value;
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 3 || y_.size() != n)
    throw std::invalid_argument("spline needs >= 3 matching points");
  for (std::size_t i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1]))
      throw std::invalid_argument("spline abscissae must increase strictly");

  // Natural spline: tridiagonal solve for second derivatives at the knots.
  m_.assign(n, 0.0);
  std::vector<double> diag(n, 0.0), rhs(n, 0.0), sub(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = x_[i] - x_[i - 1];
    const double h1 = x_[i + 1] - x_[i];
    sub[i] = h0;
    diag[i] = 2.0 * (h0 + h1);
    rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
  }
  for (std::size_t i = 2; i + 1 < n; ++i) {
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * (x_[i] - x_[i - 1]);
    rhs[i] -= w * rhs[i - 1];
  }
  for (std::size_t i = n - 2; i >= 1; --i) {
    const double upper = (i + 2 < n) ? (x_[i + 1] - x_[i]) * m_[i + 1] : 0.0;
    m_[i] = (rhs[i] - upper) / diag[i];
    if (i == 1) break;
  }
}

std::size_t CubicSpline::segment(double x) const {
  std::size_t lo = 0, hi = x_.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    (x_[mid] <= x ? lo : hi) = mid;
  }
  return lo;
}

double CubicSpline::value(double x) const {
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double A = (x_[i + 1] - x) / h;
  const double B = (x - x_[i]) / h;
  return A * y_[i] + B * y_[i + 1] +
         ((A * A * A - A) * m_[i] + (B * B * B - B) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::deriv(double x) const {
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double A = (x_[i + 1] - x) / h;
  const double B = (x - x_[i]) / h;
  return (y_[i + 1] - y_[i]) / h -
         (3.0 * A * A - 1.0) * h * m_[i] / 6.0 +
         (3.0 * B * B - 1.0) * h * m_[i + 1] / 6.0;
}

double CubicSpline::deriv2(double x) const {
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double A = (x_[i + 1] - x) / h;
  const double B = (x - x_[i]) / h;
  return A * m_[i] + B * m_[i + 1];
}

}  // namespace radcomp
