#pragma once

#include <Eigen/Dense>
#include <functional>

namespace corrocal {

// Residual callback: fills r(theta) and optionally the Jacobian dr/dtheta.
using ResidualFn =
    std::function<void(const Eigen::VectorXd& theta, Eigen::VectorXd& r,
                       Eigen::MatrixXd* jac)>;

struct LevenbergResult {
  Eigen::VectorXd theta;
  double sse = 0.0;      // sum of squared residuals at theta
  int iterations = 0;
  bool converged = false;
};

// Gauss-Newton with Levenberg damping. Jacobian is required (jac != nullptr
// is always passed). Stops on relative SSE stagnation or max_iter.
LevenbergResult levenberg_marquardt(const ResidualFn& fn,
                                    const Eigen::VectorXd& theta0,
                                    int max_iter = 200,
                                    double rel_tol = 1e-14);

}  // namespace corrocal
