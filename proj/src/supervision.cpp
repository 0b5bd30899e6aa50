#include "ailc/supervision.hpp"

#include <cmath>

#include "ailc/errors.hpp"

namespace ailc {

PolicyMode parse_policy_mode(const std::string& name) {
  if (name == "single") return PolicyMode::single_model;
  if (name == "mm_case1") return PolicyMode::case1_per_iteration;
  if (name == "mm_case2") return PolicyMode::case2_per_sample;
  throw ConfigError("unknown mode '" + name + "' (expected single, mm_case1 or mm_case2)");
}

std::string to_string(PolicyMode mode) {
  switch (mode) {
    case PolicyMode::single_model: return "single";
    case PolicyMode::case1_per_iteration: return "mm_case1";
    case PolicyMode::case2_per_sample: return "mm_case2";
  }
  return "?";
}

void validate_policy(const SwitchingPolicy& policy) {
  if (policy.model_count < 1) throw ConfigError("model count M must be >= 1");
  if (policy.mode == PolicyMode::single_model && policy.model_count != 1)
    throw ConfigError("single_model requires M = 1 (got M = " +
                      std::to_string(policy.model_count) + ")");
}

int select_case1(const Eigen::MatrixXd& errors) {
  if (errors.rows() < 1 || errors.cols() < 1)
    throw ContractViolation("select_case1 needs a non-empty M x T error matrix");
  int best = 0;
  double best_energy = errors.row(0).squaredNorm();
  for (int j = 1; j < errors.rows(); ++j) {
    const double energy = errors.row(j).squaredNorm();
    if (energy < best_energy) {
      best_energy = energy;
      best = j;
    }
  }
  return best;
}

int select_case2(const Eigen::VectorXd& errors_at_t) {
  if (errors_at_t.size() < 1)
    throw ContractViolation("select_case2 needs a non-empty error vector");
  int best = 0;
  double best_abs = std::abs(errors_at_t(0));
  for (Eigen::Index j = 1; j < errors_at_t.size(); ++j) {
    const double a = std::abs(errors_at_t(j));
    if (a < best_abs) {
      best_abs = a;
      best = static_cast<int>(j);
    }
  }
  return best;
}

int active_model(const SwitchingPolicy& policy, int k, int t, const SelectionContext& ctx) {
  validate_policy(policy);
  if (k < 1 || t < 0) throw ContractViolation("active_model needs k >= 1 and t >= 0");

  switch (policy.mode) {
    case PolicyMode::single_model:
      return 0;
    case PolicyMode::case1_per_iteration:
      return k == 1 ? 0 : ctx.case1_index;
    case PolicyMode::case2_per_sample:
      if (t == 0) return k == 1 ? 0 : ctx.case2_boundary_index;
      // e_hat(t) of the running iteration lives in column t-1.
      if (ctx.current_errors == nullptr || t - 1 >= ctx.filled)
        throw ContractViolation("case 2 selection at t=" + std::to_string(t) +
                                " would need identification errors not yet observed");
      return select_case2(ctx.current_errors->col(t - 1));
  }
  throw ContractViolation("unreachable policy mode");
}

}  // namespace ailc
