#pragma once

#include <functional>

namespace radcomp {

struct QuadResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

// Adaptive Simpson on [a, b] with absolute tolerance. Assumes a smooth
// integrand; recursion depth is capped at max_depth.
QuadResult adaptive_simpson(const std::function<double(double)>& f, double a,
                            double b, double abs_tol = 1e-10,
                            int max_depth = 40);

}  // namespace radcomp
