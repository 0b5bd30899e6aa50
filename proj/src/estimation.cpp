#include "ailc/estimation.hpp"

#include <cmath>

#include "ailc/errors.hpp"

namespace ailc {

EstimateTable::EstimateTable(int model_index, Eigen::MatrixXd estimates, double b_min)
    : model_index_(model_index), estimates_(std::move(estimates)), b_min_(b_min) {
  if (model_index_ < 0) throw ContractViolation("model index must be >= 0");
  if (estimates_.rows() < 1 || estimates_.cols() < 2)
    throw ContractViolation("estimate table must be T x (p+2) with T >= 1, p >= 0");
  const Eigen::Index b_col = estimates_.cols() - 2;
  for (Eigen::Index t = 0; t < estimates_.rows(); ++t)
    if (estimates_(t, b_col) < b_min_)
      throw ContractViolation("estimate table row " + std::to_string(t) +
                              " has b below b_min");
}

ParameterVector EstimateTable::at(int t) const {
  if (t < 0 || t >= horizon())
    throw ContractViolation("estimate lookup at t=" + std::to_string(t) +
                            " outside table horizon " + std::to_string(horizon()));
  return ParameterVector::from_flat(estimates_.row(t).transpose());
}

double predict(const ParameterVector& theta_hat, const RegressionVector& phi) {
  return stacked_inner(theta_hat.flat(), phi.flat());
}

double identification_error(double x_n_next, const ParameterVector& theta_hat,
                            const RegressionVector& phi) {
  return x_n_next - predict(theta_hat, phi);
}

Eigen::VectorXd project_flat(Eigen::VectorXd flat, double b_min) {
  const Eigen::Index b_idx = flat.size() - 2;
  if (flat(b_idx) < b_min) flat(b_idx) = b_min;
  return flat;
}

ParameterVector project(const ParameterVector& m, double b_min) {
  if (b_min <= 0.0) throw ContractViolation("b_min must be positive");
  return ParameterVector::from_flat(project_flat(m.flat(), b_min));
}

EstimateTable update_model(const EstimateTable& table, const IdentificationRecord& record,
                           double b_min) {
  const int T = table.horizon();
  if (record.phi.rows() != T || record.phi.cols() != table.dim())
    throw ContractViolation("record regressors do not cover the table horizon");
  if (table.model_index() >= record.errors.rows() || record.errors.cols() != T)
    throw ContractViolation("record errors missing for model " +
                            std::to_string(table.model_index()));

  Eigen::MatrixXd next = table.estimates();
  for (int t = 0; t < T; ++t) {
    const double s = record.phi.row(t).squaredNorm();
    // Scalar gain first: keeps phi * e_hat from overflowing on violent
    // transients before the normalization divides it back down.
    const double gain = record.errors(table.model_index(), t) / (1.0 + s);
    next.row(t) += record.phi.row(t) * gain;
    next.row(t) = project_flat(next.row(t).transpose(), b_min).transpose();
  }
  return EstimateTable(table.model_index(), std::move(next), b_min);
}

double alpha_squared(double phi_squared_norm) {
  // Evaluated as ((2+s)/(1+s))/(1+s) so huge regressors underflow gracefully
  // instead of overflowing the squared denominator.
  const double a2 = ((2.0 + phi_squared_norm) / (1.0 + phi_squared_norm)) /
                    (1.0 + phi_squared_norm);
  if (!(a2 > 0.0)) throw ContractViolation("alpha^2 must be positive");
  return a2;
}

CefDiagnostics cef_diagnostics(const Eigen::MatrixXd& true_params,
                               const std::vector<EstimateTable>& before,
                               const std::vector<EstimateTable>& after,
                               const IdentificationRecord& record) {
  if (before.empty() || before.size() != after.size())
    throw ContractViolation("cef_diagnostics needs matching model banks");
  const int M = static_cast<int>(before.size());
  const int T = before.front().horizon();
  if (true_params.rows() != T || true_params.cols() != before.front().dim())
    throw ContractViolation("true parameter table does not match the estimate tables");

  CefDiagnostics diag;
  diag.v_before.resize(M, T);
  diag.v_after.resize(M, T);
  diag.delta_v.resize(M, T);
  diag.alpha_sq.resize(T);
  diag.param_err_before.reserve(M);

  for (int t = 0; t < T; ++t) diag.alpha_sq(t) = alpha_squared(record.phi.row(t).squaredNorm());

  for (int j = 0; j < M; ++j) {
    Eigen::MatrixXd tilde = true_params - before[j].estimates();
    for (int t = 0; t < T; ++t) {
      diag.v_before(j, t) = tilde.row(t).squaredNorm();
      diag.v_after(j, t) = (true_params.row(t) - after[j].estimates().row(t)).squaredNorm();
    }
    diag.param_err_before.push_back(std::move(tilde));
  }
  diag.delta_v = diag.v_after - diag.v_before;
  return diag;
}

}  // namespace ailc
