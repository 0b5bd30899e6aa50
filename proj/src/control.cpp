#include "ailc/control.hpp"

#include <cmath>

#include "ailc/errors.hpp"

namespace ailc {

TrackingMemory::TrackingMemory(int horizon, double beta_in)
    : e_prev(Eigen::VectorXd::Zero(horizon)), beta(beta_in) {
  if (horizon < 1) throw ConfigError("tracking memory horizon must be >= 1");
  if (!(beta > 0.0 && beta < 1.0)) throw ConfigError("beta must lie in (0, 1)");
}

double control_input(const ParameterVector& theta_hat_sel, const Eigen::VectorXd& xi,
                     double rho_t, double e_prev_t1, double beta) {
  if (theta_hat_sel.b() <= 0.0)
    throw InvariantViolation("positive_b_hat", -1, -1, -1,
                             "selected estimate has non-positive b; projection must prevent this");
  if (xi.size() != theta_hat_sel.p())
    throw ContractViolation("regressor nonlinearity length does not match estimate");
  const double bracket = beta * e_prev_t1 + rho_t - theta_hat_sel.theta1().dot(xi) -
                         theta_hat_sel.d();
  return bracket / theta_hat_sel.b();
}

bool tracking_error_recursion_check(double e_n_k, double e_hat_sel, double e_prev_t1,
                                    double beta) {
  const double expected = e_hat_sel + beta * e_prev_t1;
  const double scale = std::max({1.0, std::abs(e_n_k), std::abs(expected)});
  return std::abs(e_n_k - expected) <= 1e-9 * scale;
}

}  // namespace ailc
