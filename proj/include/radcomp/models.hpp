#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace radcomp {

// Second-order jet of the warp function f at a radius r.
struct WarpJet {
  double f = 0.0;    // f(r)
  double fp = 0.0;   // f'(r)
  double fpp = 0.0;  // f''(r)
};

// Second-order jet of the density phi at (r, theta). For radial densities
// all theta entries are identically zero.
struct DensityJet {
  double phi = 0.0;
  double phi_r = 0.0;
  double phi_th = 0.0;
  double phi_rr = 0.0;
  double phi_rth = 0.0;
  double phi_thth = 0.0;
};

struct ModelSpec {
  struct Warp {
    std::string kind = "identity";  // identity | power | sin | sinh | perturbed | custom
    std::map<std::string, double> params;
    std::vector<double> r_table;  // custom only
    std::vector<double> f_table;
  };
  struct Density {
    std::string kind = "zero";  // zero | constant | bounded | cone_log | custom
    std::map<std::string, double> params;
    std::vector<double> r_table;  // custom only
    std::vector<double> phi_table;
  };
  Warp warp;
  Density density;
  int n = 3;
  double r_min = 0.1;
  double r_max = 10.0;
};

// Rotationally symmetric manifold with density: g = dr^2 + f(r)^2 g_0 on
// (r_min, r_max) x S^{n-1}, weight e^{-phi(r,theta)}. Evaluators are pure
// and the object is immutable after construction; safe to share across
// threads.
class ManifoldModel {
 public:
  using WarpFn = std::function<WarpJet(double)>;
  using DensityFn = std::function<DensityJet(double, double)>;

  ManifoldModel(int n, WarpFn warp, DensityFn density, double r_min,
                double r_max, bool radial_density, bool smooth_at_origin);

  int dimension() const { return n_; }
  WarpJet warp(double r) const { return warp_(r); }
  DensityJet density(double r, double theta = 0.0) const {
    return density_(r, theta);
  }
  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }
  bool radial_density() const { return radial_density_; }
  bool smooth_at_origin() const { return smooth_at_origin_; }

  bool in_domain(double r) const { return r >= r_min_ && r <= r_max_; }

 private:
  int n_;
  WarpFn warp_;
  DensityFn density_;
  double r_min_, r_max_;
  bool radial_density_;
  bool smooth_at_origin_;
};

// Hypothesis constants a <= phi <= 0, |grad phi| <= c / r, with the derived
// comparison constant K = e^{-2a}(1 + c).
struct DensityBounds {
  double a = 0.0;
  double c = 0.0;
  double K() const;
};

// K = e^{-2a}(1 + c); rejects a > 0 or c < 0.
double comparison_constant(double a, double c);

// Builds a model from a declarative spec; throws std::invalid_argument on
// unknown family names or parameters outside their domain.
ManifoldModel build_model(const ModelSpec& spec);

// Reparametrized distance s(r): quadrature of e^{-2 phi(t, theta)} over
// [0, r] along a fixed-theta ray. s(r) >= r whenever phi <= 0.
double reparam_distance(const ManifoldModel& model, double r,
                        double theta = 0.0, double abs_tol = 1e-10);

// Natural cubic spline with jet evaluation, used by the custom tabulated
// warp and density families.
class CubicSpline {
 public:
  CubicSpline(std::vector<double> x, std::vector<double> y);
  double value(double x) const;
  double deriv(double x) const;
  double deriv2(double x) const;

 private:
  std::size_t segment(double x) const;
  std::vector<double> x_, y_, m_;  // m_: second derivatives at knots
};

}  // namespace radcomp
