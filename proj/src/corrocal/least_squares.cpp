#include "corrocal/least_squares.hpp"

#include <cmath>

namespace corrocal {

LevenbergResult levenberg_marquardt(const ResidualFn& fn,
                                    const Eigen::VectorXd& theta0,
                                    int max_iter, double rel_tol) {
  LevenbergResult out;
  out.theta = theta0;

  Eigen::VectorXd r;
  Eigen::MatrixXd J;
  fn(out.theta, r, &J);
  out.sse = r.squaredNorm();

  double lambda = 1e-3;
  for (int it = 0; it < max_iter; ++it) {
    out.iterations = it + 1;
    const Eigen::MatrixXd JtJ = J.transpose() * J;
    const Eigen::VectorXd Jtr = J.transpose() * r;

    Eigen::MatrixXd A = JtJ;
    // Marquardt scaling: damp along the diagonal of JtJ.
    for (int i = 0; i < A.rows(); ++i) {
      A(i, i) += lambda * (JtJ(i, i) > 0.0 ? JtJ(i, i) : 1.0);
    }
    const Eigen::VectorXd step = A.ldlt().solve(Jtr);
    if (!step.allFinite()) {
      lambda *= 10.0;
      if (lambda > 1e12) break;
      continue;
    }

    const Eigen::VectorXd cand = out.theta - step;
    Eigen::VectorXd r_cand;
    Eigen::MatrixXd J_cand;
    fn(cand, r_cand, &J_cand);
    const double sse_cand = r_cand.squaredNorm();

    if (std::isfinite(sse_cand) && sse_cand < out.sse) {
      const double drop = out.sse - sse_cand;
      out.theta = cand;
      r = std::move(r_cand);
      J = std::move(J_cand);
      out.sse = sse_cand;
      lambda = std::max(lambda * 0.3, 1e-12);
      if (drop <= rel_tol * (out.sse + 1e-300)) {
        out.converged = true;
        break;
      }
    } else {
      lambda *= 10.0;
      if (lambda > 1e12) {
        out.converged = true;  // no further reduction possible
        break;
      }
    }
  }
  return out;
}

}  // namespace corrocal
