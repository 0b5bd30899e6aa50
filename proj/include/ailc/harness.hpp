#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ailc/control.hpp"
#include "ailc/estimation.hpp"
#include "ailc/plant.hpp"
#include "ailc/reference.hpp"
#include "ailc/supervision.hpp"

namespace ailc {

enum class InitMode { random_box, true_theta };

InitMode parse_init_mode(const std::string& name);
std::string to_string(InitMode mode);

/// Fully resolved experiment description. Defaults mirror the built-in
/// experiments: T = 100, K = 60, beta = 0.2, b_min = 0.1, M = 10 for the
/// multi-model modes and 1 otherwise.
struct ExperimentConfig {
  std::string plant = "NL_D";
  ScheduleVariant schedule = ScheduleVariant::literal;
  ReferenceKind reference = ReferenceKind::iteration_invariant;
  int T = 100;
  int K = 60;
  double beta = 0.2;
  PolicyMode mode = PolicyMode::single_model;
  int M = 1;
  double b_min = 0.1;
  std::uint64_t seed = 0;
  double init_lo = -5.0;   // initialisation box for theta1 and d components
  double init_hi = 5.0;
  double init_b_lo = 2.0;  // b component drawn from [max(b_min, init_b_lo), init_b_hi]
  double init_b_hi = 5.0;
  InitMode init_mode = InitMode::random_box;
  bool freeze_estimates = false;
  bool check_invariants = true;
  std::string out_dir;
};

/// Throws ConfigError naming the offending field if any knob is out of range
/// or the policy/model-count combination is inconsistent.
void validate_config(const ExperimentConfig& config);

/// Full trace of one iteration.
struct IterationRecord {
  int k = 0;                   // 1-based iteration index
  Eigen::MatrixXd states;      // (T+1) x n
  Eigen::VectorXd inputs;      // T
  Eigen::VectorXd reference;   // T+1, x_m
  Eigen::VectorXd track_err;   // T; entry t = e_{n,k}(t+1)
  Eigen::MatrixXd ident_err;   // M x T; (j, t) = e_hat_{n,j,k}(t+1)
  Eigen::VectorXd sel_err;     // T; identification error of the model used at (k, t)
  std::vector<int> j_star;     // T; 0-based selected model per sample
  int switch_count = 0;
  double max_track_err = 0.0;  // max_t |e_{n,k}(t+1)|
  double max_ident_err = 0.0;  // max_t |sel_err(t)|
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<IterationRecord> iterations;
  std::vector<double> scaling_draws;  // one per iteration when the reference varies
  double rms_track = 0.0;             // sqrt(mean_k max_track_err^2)
  double rms_ident = 0.0;
  double min_stored_b = 0.0;          // smallest b component ever stored in any table
  // Per-sample peak |sel_err| over the first and last 10 iterations, for
  // convergence-tail inspection.
  Eigen::VectorXd head_window_max_sel_err;
  Eigen::VectorXd tail_window_max_sel_err;
};

/// M per-sample estimate tables plus the running invariant-check state that
/// spans iterations (initial energies and the cumulative l2 budget).
struct EstimatorBank {
  std::vector<EstimateTable> tables;
  Eigen::MatrixXd v_initial;    // M x T, V_{j,1}(t)
  Eigen::MatrixXd budget_used;  // M x T, running sum of (alpha e_hat)^2
};

/// Internal cross-iteration state owned by run_experiment.
struct LoopState {
  EstimatorBank bank;
  TrackingMemory memory;
  SelectionTrace trace;
  int case1_index = 0;
  int case2_boundary_index = 0;

  LoopState(EstimatorBank b, TrackingMemory m) : bank(std::move(b)), memory(std::move(m)) {}
};

/// Runs one complete iteration k: simulates all T samples with the switching
/// policy, records every error, applies the offline update to every model,
/// refreshes the tracking memory and selection state, and (when enabled)
/// asserts the energy, increment, projection and closed-loop invariants,
/// throwing InvariantViolation with (k, t, j) coordinates on breach.
IterationRecord run_iteration(int k, const PlantSpec& plant, const ReferenceTrajectory& traj,
                              const SwitchingPolicy& policy, const ExperimentConfig& config,
                              LoopState& state);

/// Runs the K-iteration experiment described by `config`.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// sqrt((1/K) sum_k v_k^2); the root-mean-square of per-iteration peaks.
double rms_metric(const Eigen::VectorXd& inf_norms);

struct BatchRow {
  std::uint64_t seed = 0;
  double rms_track = 0.0;
  double rms_ident = 0.0;
  double final_max_track = 0.0;
  double final_max_ident = 0.0;
};

struct BatchResult {
  std::vector<BatchRow> rows;
  double mean_rms_track = 0.0, min_rms_track = 0.0, max_rms_track = 0.0;
  double mean_rms_ident = 0.0, min_rms_ident = 0.0, max_rms_ident = 0.0;
};

/// Runs `config` once per seed (each run independent) and aggregates the RMS
/// metrics. Reports are not retained; use run_experiment for full traces.
BatchResult batch_run(const ExperimentConfig& config, const std::vector<std::uint64_t>& seeds);

}  // namespace ailc
