#pragma once

#include <Eigen/Core>

#include "ailc/types.hpp"

namespace ailc {

/// Previous-iteration tracking errors feeding the damping term of the control
/// law: e_prev(t) holds e_{n,k-1}(t+1). Owned single-writer by the experiment
/// loop and refreshed at iteration end.
struct TrackingMemory {
  TrackingMemory(int horizon, double beta);

  Eigen::VectorXd e_prev;  // length T
  double beta;             // in (0, 1)
};

/// Certainty-equivalent control input
///   u = (1/b_hat) [ beta e_{n,k-1}(t+1) + rho(t) - theta1_hat^T xi - d_hat ].
/// The selected estimate must have b_hat >= b_min > 0 (projection guarantees
/// it; a non-positive b_hat here is an internal fault).
double control_input(const ParameterVector& theta_hat_sel, const Eigen::VectorXd& xi,
                     double rho_t, double e_prev_t1, double beta);

/// Closed-loop consistency oracle: checks
///   e_{n,k}(t+1) = e_hat_{n,j*,k}(t+1) + beta e_{n,k-1}(t+1)
/// to 1e-9 relative tolerance (unit floor, so near-zero errors compare
/// absolutely). The harness asserts this at every step.
bool tracking_error_recursion_check(double e_n_k, double e_hat_sel, double e_prev_t1,
                                    double beta);

}  // namespace ailc
