#include "radcomp/quadrature.hpp"

#include <cmath>

namespace radcomp {

namespace {

double simpson(double h, double fa, double fm, double fb) {
  return (fa + 4.0 * fm + fb) * (h / 6.0);
}

double recurse(const std::function<double(double)>& f, double a, double m,
               double b, double fa, double fm, double fb, double whole,
               double tol, int depth, double& err_accum) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(m - a, fa, flm, fm);
  const double right = simpson(b - m, fm, frm, fb);
  const double err = (left + right - whole) / 15.0;
  // The estimate bottoms out at roundoff of the partial sums; for large
  // integrals a pure absolute tolerance would recurse to max depth.
  const double floor = 1e-14 * (std::abs(left) + std::abs(right));
  if (std::abs(err) <= tol + floor || depth <= 0) {
    err_accum += std::abs(err);
    return left + right + err;
  }
  return recurse(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1,
                 err_accum) +
         recurse(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1,
                 err_accum);
}

}  // namespace

QuadResult adaptive_simpson(const std::function<double(double)>& f, double a,
                            double b, double abs_tol, int max_depth) {
  if (a == b) return {0.0, 0.0};
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = simpson(b - a, fa, fm, fb);
  QuadResult out;
  out.value =
      recurse(f, a, m, b, fa, fm, fb, whole, abs_tol, max_depth, out.error_estimate);
  return out;
}

}  // namespace radcomp
