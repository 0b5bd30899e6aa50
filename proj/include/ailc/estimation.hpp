#pragma once

#include <Eigen/Core>
#include <vector>

#include "ailc/types.hpp"

namespace ailc {

/// Per-sample parameter estimates of one identification model: row t holds
/// the stacked estimate for sample t, t in {0..T-1}. Every stored row keeps
/// its b component at or above b_min; the constructor and the update law both
/// enforce this.
class EstimateTable {
public:
  EstimateTable(int model_index, Eigen::MatrixXd estimates, double b_min);

  int model_index() const { return model_index_; }
  int horizon() const { return static_cast<int>(estimates_.rows()); }
  Eigen::Index dim() const { return estimates_.cols(); }  // p+2
  double b_min() const { return b_min_; }

  ParameterVector at(int t) const;
  const Eigen::MatrixXd& estimates() const { return estimates_; }

private:
  int model_index_;
  Eigen::MatrixXd estimates_;
  double b_min_;
};

/// One completed iteration's worth of identification data: the regressors
/// phi(t) (row t) and, per model, the scalar errors e_hat_{n,j}(t+1) stored
/// at column t.
struct IdentificationRecord {
  Eigen::MatrixXd phi;     // T x (p+2)
  Eigen::MatrixXd errors;  // M x T
};

/// Identification-model prediction x_hat_n(t+1) = theta_hat^T phi.
double predict(const ParameterVector& theta_hat, const RegressionVector& phi);

/// e_hat_n(t+1) = x_n(t+1) - theta_hat^T phi.
double identification_error(double x_n_next, const ParameterVector& theta_hat,
                            const RegressionVector& phi);

/// Clamps the b component up to b_min, leaving everything else untouched.
ParameterVector project(const ParameterVector& m, double b_min);
Eigen::VectorXd project_flat(Eigen::VectorXd flat, double b_min);

/// End-of-iteration offline update of one model's whole table:
///   theta_hat' (t) = Proj[ theta_hat(t) + phi(t) e_hat(t+1) / (1 + ||phi(t)||^2) ]
/// for every t. The record must hold phi and the model's errors for all T
/// samples of the completed iteration.
EstimateTable update_model(const EstimateTable& table, const IdentificationRecord& record,
                           double b_min);

/// alpha^2(t) = (2 + ||phi||^2) / (1 + ||phi||^2)^2, the coefficient in the
/// energy-decrease bound. Always in (0, 3/4] because ||phi||^2 >= 1.
double alpha_squared(double phi_squared_norm);

/// Simulation-only energy diagnostics: V = ||theta(t) - theta_hat(t)||^2 per
/// model and sample, its per-iteration change, and alpha^2. Requires the true
/// parameter table (row t = true theta(t)), which is never part of the
/// controller's information set.
struct CefDiagnostics {
  Eigen::MatrixXd v_before;   // M x T
  Eigen::MatrixXd v_after;    // M x T
  Eigen::MatrixXd delta_v;    // M x T
  Eigen::VectorXd alpha_sq;   // T
  std::vector<Eigen::MatrixXd> param_err_before;  // per model, T x (p+2); theta(t) - theta_hat(t)
};

CefDiagnostics cef_diagnostics(const Eigen::MatrixXd& true_params,
                               const std::vector<EstimateTable>& before,
                               const std::vector<EstimateTable>& after,
                               const IdentificationRecord& record);

}  // namespace ailc
