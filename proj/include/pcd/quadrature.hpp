#pragma once

#include <cstddef>
#include <functional>

namespace pcd::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7/15) on [a, b].
Result integrate(const std::function<double(double)>& f, double a, double b, double abs_tol,
                 std::size_t max_evaluations = 2'000'000);

/// Globally adaptive tensor-product Gauss-Kronrod (7/15) on [ax,bx] x [ay,by].
/// The cell with the largest error estimate is split into quadrants until the
/// summed estimate drops below abs_tol.
Result integrate(const std::function<double(double, double)>& f, double ax, double bx, double ay, double by,
                 double abs_tol, std::size_t max_evaluations = 20'000'000);

/// Integral over [0, inf) via w = t / (1 - t).
Result integrate_half_line(const std::function<double(double)>& f, double abs_tol);
/// Integral over [0, inf)^2 via w_i = t_i / (1 - t_i) on each axis.
Result integrate_quadrant(const std::function<double(double, double)>& f, double abs_tol);

}  // namespace pcd::quad
