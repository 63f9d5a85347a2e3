#pragma once

#include <functional>

namespace gammacop {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive Gauss-Kronrod (15-point) on [a, b].
QuadResult integrate_1d(const std::function<double(double)>& f, double a, double b, double tol = 1e-10,
                        int max_depth = 20);

/// Tanh-sinh on [a, b]; tolerates integrable endpoint singularities.
QuadResult integrate_tanh_sinh(const std::function<double(double)>& f, double a, double b, double tol = 1e-10);

/// Nested adaptive Gauss-Kronrod over a box. The reported error adds the
/// outer estimate and the worst inner estimate times the outer width.
QuadResult integrate_2d(const std::function<double(double, double)>& f, double ax, double bx, double ay, double by,
                        double tol = 1e-8, int max_depth = 15);

/// Tensor Gauss-Legendre over a box, 3 panels per axis with x = lo + (hi-lo) t^2
/// so that power-law behaviour at the lower faces is smoothed. Refines
/// 10 -> 15 -> 20 nodes per panel until successive levels agree to tol
/// (relative); the error is the last difference.
QuadResult integrate_3d(const std::function<double(double, double, double)>& f, const double lo[3], const double hi[3],
                        double tol = 1e-4);

}  // namespace gammacop
