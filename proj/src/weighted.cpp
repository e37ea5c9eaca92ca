#include "radcomp/weighted.hpp"

#include <cmath>
#include <stdexcept>

namespace radcomp {

namespace {

// Hess phi(V,V) for V = a d_r + b e_theta, via the warped-product
// Christoffel symbols. For radial densities the theta derivatives vanish
// and the expression reduces to a^2 phi_rr + b^2 (f'/f) phi_r.
double hess_phi_bilinear(const WarpJet& w, const DensityJet& d, double a,
                         double b) {
  const double h_rr = d.phi_rr;
  const double h_rth = (d.phi_rth - (w.fp / w.f) * d.phi_th) / w.f;
  const double h_thth = (d.phi_thth + w.f * w.fp * d.phi_r) / (w.f * w.f);
  return a * a * h_rr + 2.0 * a * b * h_rth + b * b * h_thth;
}

double dphi_along(const WarpJet& w, const DensityJet& d, double a, double b) {
  return a * d.phi_r + b * d.phi_th / w.f;
}

}  // namespace

RadialTensorEigen hess_r(const ManifoldModel& model, double r) {
  const WarpJet w = model.warp(r);
  if (w.f == 0.0)
    throw std::domain_error("hess_r: warp vanishes at r = " + std::to_string(r));
  return {0.0, w.fp / w.f, 0.0};
}

double hess_density(const ManifoldModel& model, double r, double theta,
                    double psi) {
  return hess_phi_bilinear(model.warp(r), model.density(r, theta),
                           std::cos(psi), std::sin(psi));
}

double weighted_sec(const ManifoldModel& model, double r, double theta,
                    const PlaneSpec& plane) {
  const WarpJet w = model.warp(r);
  const DensityJet d = model.density(r, theta);
  const double cp = std::cos(plane.psi);
  const double sp = std::sin(plane.psi);

  const double sec_radial = -w.fpp / w.f;  // planes containing d_r
  const double sec_tangential = (1.0 - w.fp * w.fp) / (w.f * w.f);

  double sec;
  double ua, ub;  // U in the {d_r, e_theta} frame
  if (model.dimension() >= 3) {
    // U = cos(psi) d_r + sin(psi) X, V = Y with X, Y orthonormal tangential.
    sec = cp * cp * sec_radial + sp * sp * sec_tangential;
    if (plane.u_is_mixed_leg) {
      ua = cp;
      ub = sp;
    } else {
      ua = 0.0;
      ub = 1.0;
    }
  } else {
    // n = 2: the tangent plane is unique; its curvature is -f''/f. The
    // second leg is the in-plane orthogonal complement of the mixed leg.
    sec = sec_radial;
    if (plane.u_is_mixed_leg) {
      ua = cp;
      ub = sp;
    } else {
      ua = -sp;
      ub = cp;
    }
  }

  const double dphi_u = dphi_along(w, d, ua, ub);
  return sec + hess_phi_bilinear(w, d, ua, ub) + dphi_u * dphi_u;
}

MinResult min_weighted_sec(const ManifoldModel& model,
                           const std::vector<GridPoint>& grid,
                           int psi_samples) {
  if (grid.empty() || psi_samples < 2)
    throw std::invalid_argument("min_weighted_sec: empty grid");
  MinResult best;
  bool first = true;
  for (const auto& p : grid) {
    for (int k = 0; k < psi_samples; ++k) {
      const double psi = (M_PI / 2.0) * k / (psi_samples - 1);
      for (bool mixed : {true, false}) {
        const double v = weighted_sec(model, p.r, p.theta, {psi, mixed});
        if (first || v < best.value) {
          best = {v, p.r, p.theta, psi};
          first = false;
        }
      }
    }
  }
  return best;
}

RadialTensorEigen mhess_u(const ManifoldModel& model, double r, double theta) {
  const WarpJet w = model.warp(r);
  const DensityJet d = model.density(r, theta);
  return {1.0 - r * d.phi_r, r * w.fp / w.f - r * d.phi_r, 0.0};
}

RadialTensorEigen mchess_u_via_conformal(const ManifoldModel& model, double r,
                                         double theta) {
  const WarpJet w = model.warp(r);
  const DensityJet d = model.density(r, theta);

  // Hess_g u for u = r^2/2, in the orthonormal frame {d_r, e_theta}.
  const double hess_u_rr = 1.0;
  const double hess_u_tt = r * w.fp / w.f;
  const double hess_u_rt = 0.0;

  // du = r dr, dphi = phi_r dr + (phi_th / f) e_theta^flat.
  const double du_r = r, du_t = 0.0;
  const double dphi_r = d.phi_r, dphi_t = d.phi_th / w.f;
  const double sym_rr = 2.0 * dphi_r * du_r;
  const double sym_tt = 2.0 * dphi_t * du_t;
  const double sym_rt = dphi_r * du_t + dphi_t * du_r;
  const double g_grad = dphi_r * du_r + dphi_t * du_t;  // g(grad phi, grad u)

  // Conformal Hessian for gt = e^{-2 phi} g, then strip the symmetric
  // product again to land on the modified conformal Hessian.
  const double conf_rr = hess_u_rr + sym_rr - g_grad;
  const double conf_tt = hess_u_tt + sym_tt - g_grad;
  const double conf_rt = hess_u_rt + sym_rt;

  return {conf_rr - sym_rr, conf_tt - sym_tt, conf_rt - sym_rt};
}

double laplacian_r(const ManifoldModel& model, double r) {
  const WarpJet w = model.warp(r);
  return (model.dimension() - 1) * w.fp / w.f;
}

double weighted_laplacian_r(const ManifoldModel& model, double r,
                            double theta) {
  return laplacian_r(model, r) - model.density(r, theta).phi_r;
}

}  // namespace radcomp
