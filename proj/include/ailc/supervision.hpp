#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace ailc {

enum class PolicyMode { single_model, case1_per_iteration, case2_per_sample };

PolicyMode parse_policy_mode(const std::string& name);
std::string to_string(PolicyMode mode);

/// Model-selection policy. Ties always break toward the lowest index, and
/// single_model forces a bank of exactly one.
struct SwitchingPolicy {
  PolicyMode mode = PolicyMode::single_model;
  int model_count = 1;  // M
};

void validate_policy(const SwitchingPolicy& policy);

/// Which model drove the control input, recorded per decision point. Indices
/// are 0-based internally; file outputs render them 1-based.
struct SelectionTrace {
  std::vector<int> per_iteration;               // Case 1 choice governing iteration k
  std::vector<std::vector<int>> per_sample;     // chosen index at each (k, t)
  std::vector<int> switches_per_iteration;
};

/// Per-iteration criterion: argmin_j sum_t |e_hat_{n,j}(t+1)|^2 over one
/// completed iteration. `errors` is M x T.
int select_case1(const Eigen::MatrixXd& errors);

/// Per-sample criterion: argmin_j |e_hat_{n,j}| at one sample.
int select_case2(const Eigen::VectorXd& errors_at_t);

/// Everything available to the switching rule strictly before control is
/// computed at (k, t). `current_errors` column c holds e_hat_{n,j,k}(c+1);
/// only the first `filled` columns exist yet.
struct SelectionContext {
  int case1_index = 0;           // chosen from iteration k-1 (model 0 when k = 1)
  int case2_boundary_index = 0;  // j*_{k-1}(T), carried across the iteration boundary
  const Eigen::MatrixXd* current_errors = nullptr;  // M x T, partially filled
  int filled = 0;                // columns 0..filled-1 of current_errors are valid
};

/// Resolves which model's estimates feed the controller at (k, t):
///  - single_model: always model 0;
///  - Case 1: the index chosen from iteration k-1 (model 0 in iteration 1);
///  - Case 2: argmin |e_hat(t)| of the current iteration for t >= 1, the
///    previous iteration's final selection at t = 0, model 0 at (1, 0).
/// Requesting data that is not yet available is a contract violation.
int active_model(const SwitchingPolicy& policy, int k, int t, const SelectionContext& ctx);

}  // namespace ailc
