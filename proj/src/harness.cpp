#include "ailc/harness.hpp"

#include <algorithm>
#include <cmath>

#include "ailc/errors.hpp"
#include "ailc/rng.hpp"

namespace ailc {

InitMode parse_init_mode(const std::string& name) {
  if (name == "random_box") return InitMode::random_box;
  if (name == "true_theta") return InitMode::true_theta;
  throw ConfigError("unknown init mode '" + name + "' (expected random_box or true_theta)");
}

std::string to_string(InitMode mode) {
  return mode == InitMode::random_box ? "random_box" : "true_theta";
}

void validate_config(const ExperimentConfig& config) {
  parse_builtin_plant(config.plant);
  if (config.T < 2) throw ConfigError("T must be >= 2");
  if (config.K < 1) throw ConfigError("K must be >= 1");
  if (!(config.beta > 0.0 && config.beta < 1.0)) throw ConfigError("beta must lie in (0, 1)");
  if (config.b_min <= 0.0) throw ConfigError("b_min must be positive");
  validate_policy(SwitchingPolicy{config.mode, config.M});
  if (config.init_lo > config.init_hi) throw ConfigError("init box is inverted (init_lo > init_hi)");
  if (config.init_b_hi < std::max(config.b_min, config.init_b_lo))
    throw ConfigError("init_b_hi must be >= max(b_min, init_b_lo)");
}

namespace {

// True stacked parameters over the horizon, row t = theta(t). Simulation-only.
Eigen::MatrixXd true_parameter_table(const PlantSpec& plant) {
  Eigen::MatrixXd table(plant.horizon, plant.p + 2);
  for (int t = 0; t < plant.horizon; ++t)
    table.row(t) = plant.parameter_schedule(t).flat().transpose();
  return table;
}

EstimatorBank make_bank(const ExperimentConfig& config, const PlantSpec& plant) {
  const int T = config.T;
  const int dim = plant.p + 2;
  UniformStream init_stream(config.seed, Substream::initial_estimates);

  EstimatorBank bank;
  bank.tables.reserve(config.M);
  const Eigen::MatrixXd truth = true_parameter_table(plant);

  for (int j = 0; j < config.M; ++j) {
    Eigen::MatrixXd estimates(T, dim);
    if (config.init_mode == InitMode::true_theta) {
      estimates = truth;
    } else {
      Eigen::VectorXd draw(dim);
      for (int c = 0; c < plant.p; ++c) draw(c) = init_stream.next(config.init_lo, config.init_hi);
      draw(plant.p) = init_stream.next(std::max(config.b_min, config.init_b_lo), config.init_b_hi);
      draw(plant.p + 1) = init_stream.next(config.init_lo, config.init_hi);
      estimates = draw.transpose().replicate(T, 1);
    }
    bank.tables.emplace_back(j, std::move(estimates), config.b_min);
  }

  bank.v_initial.resize(config.M, T);
  for (int j = 0; j < config.M; ++j)
    for (int t = 0; t < T; ++t)
      bank.v_initial(j, t) = (truth.row(t) - bank.tables[j].estimates().row(t)).squaredNorm();
  bank.budget_used = Eigen::MatrixXd::Zero(config.M, T);
  return bank;
}

constexpr double kCefSlack = 1e-12;        // absolute, monotonicity of V
constexpr double kDeltaVSlack = 1e-10;     // absolute, energy-decrease bound
constexpr double kIncrementSlack = 1e-12;  // absolute, per-update step size
constexpr double kBudgetSlack = 1e-8;      // absolute, cumulative l2 budget

void check_update_invariants(int k, const Eigen::MatrixXd& true_params,
                             const std::vector<EstimateTable>& before,
                             const std::vector<EstimateTable>& after,
                             const IdentificationRecord& record, EstimatorBank& bank,
                             double b_min) {
  const CefDiagnostics diag = cef_diagnostics(true_params, before, after, record);
  const int M = static_cast<int>(before.size());
  const int T = before.front().horizon();
  const Eigen::Index b_col = before.front().dim() - 2;

  for (int j = 0; j < M; ++j) {
    for (int t = 0; t < T; ++t) {
      const double dv = diag.delta_v(j, t);
      if (dv > kCefSlack)
        throw InvariantViolation("cef_monotonicity", k, t, j, "delta V = " + std::to_string(dv));

      const double e_hat = record.errors(j, t);
      const double scaled = std::sqrt(diag.alpha_sq(t)) * e_hat;
      if (dv > -(scaled * scaled) + kDeltaVSlack)
        throw InvariantViolation("delta_v_bound", k, t, j,
                                 "delta V exceeds -alpha^2 e_hat^2 by " +
                                     std::to_string(dv + scaled * scaled));

      const double step =
          (after[j].estimates().row(t) - before[j].estimates().row(t)).norm();
      if (step > std::abs(e_hat) + kIncrementSlack)
        throw InvariantViolation("increment_bound", k, t, j,
                                 "update step " + std::to_string(step) + " exceeds |e_hat| " +
                                     std::to_string(std::abs(e_hat)));

      bank.budget_used(j, t) += scaled * scaled;
      if (bank.budget_used(j, t) > bank.v_initial(j, t) + kBudgetSlack)
        throw InvariantViolation("l2_budget", k, t, j,
                                 "cumulative alpha^2 e_hat^2 exceeds initial energy");

      if (after[j].estimates()(t, b_col) < b_min)
        throw InvariantViolation("projection_safety", k, t, j, "stored b below b_min");
    }
  }
}

}  // namespace

IterationRecord run_iteration(int k, const PlantSpec& plant, const ReferenceTrajectory& traj,
                              const SwitchingPolicy& policy, const ExperimentConfig& config,
                              LoopState& state) {
  const int T = plant.horizon;
  const int n = plant.order;
  const int M = policy.model_count;
  if (traj.rho.size() != T)
    throw ContractViolation("reference trajectory horizon does not match the plant");

  IterationRecord rec;
  rec.k = k;
  rec.states.resize(T + 1, n);
  rec.inputs.resize(T);
  rec.reference = traj.x_m;
  rec.track_err.resize(T);
  rec.ident_err.resize(M, T);
  rec.sel_err.resize(T);
  rec.j_star.resize(T);

  Eigen::VectorXd x = plant.initial_state;
  rec.states.row(0) = x.transpose();

  IdentificationRecord record;
  record.phi.resize(T, plant.p + 2);
  record.errors.resize(M, T);

  for (int t = 0; t < T; ++t) {
    const Eigen::VectorXd xi = plant.regression_fn(x);

    SelectionContext ctx;
    ctx.case1_index = state.case1_index;
    ctx.case2_boundary_index = state.case2_boundary_index;
    ctx.current_errors = &record.errors;
    ctx.filled = t;
    const int j_star = active_model(policy, k, t, ctx);
    rec.j_star[t] = j_star;

    const double u = control_input(state.bank.tables[j_star].at(t), xi, traj.rho(t),
                                   state.memory.e_prev(t), config.beta);
    rec.inputs(t) = u;

    const RegressionVector phi(xi, u);
    record.phi.row(t) = phi.flat().transpose();

    const Eigen::VectorXd x_next = plant_step(x, u, t, plant);
    const double x_n_next = x_next(n - 1);

    for (int j = 0; j < M; ++j)
      record.errors(j, t) = identification_error(x_n_next, state.bank.tables[j].at(t), phi);
    rec.sel_err(t) = record.errors(j_star, t);
    rec.track_err(t) = x_n_next - traj.x_m(t + 1);

    if (config.check_invariants) {
      if (!tracking_error_recursion_check(rec.track_err(t), rec.sel_err(t),
                                          state.memory.e_prev(t), config.beta))
        throw InvariantViolation("closed_loop_identity", k, t, j_star,
                                 "e != e_hat_sel + beta * e_prev");
      if (std::abs(rec.sel_err(t)) > record.errors.col(t).cwiseAbs().maxCoeff())
        throw InvariantViolation("selected_error_bounded", k, t, j_star,
                                 "selected error exceeds the per-model maximum");
    }

    x = x_next;
    rec.states.row(t + 1) = x.transpose();
  }

  rec.ident_err = record.errors;
  rec.switch_count = 0;
  for (int t = 1; t < T; ++t)
    if (rec.j_star[t] != rec.j_star[t - 1]) ++rec.switch_count;

  if (!config.freeze_estimates) {
    std::vector<EstimateTable> updated;
    updated.reserve(M);
    for (int j = 0; j < M; ++j)
      updated.push_back(update_model(state.bank.tables[j], record, config.b_min));
    if (config.check_invariants)
      check_update_invariants(k, true_parameter_table(plant), state.bank.tables, updated,
                              record, state.bank, config.b_min);
    state.bank.tables = std::move(updated);
  }

  state.memory.e_prev = rec.track_err;
  state.case1_index = select_case1(record.errors);
  state.case2_boundary_index = select_case2(record.errors.col(T - 1));

  state.trace.per_iteration.push_back(rec.j_star.front());
  state.trace.per_sample.push_back(rec.j_star);
  state.trace.switches_per_iteration.push_back(rec.switch_count);

  rec.max_track_err = rec.track_err.cwiseAbs().maxCoeff();
  rec.max_ident_err = rec.sel_err.cwiseAbs().maxCoeff();
  return rec;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  validate_config(config);
  const PlantSpec plant =
      builtin_plant(parse_builtin_plant(config.plant), config.schedule, config.T, config.b_min);

  ReferenceSpec ref;
  ref.kind = config.reference;
  ref.horizon = config.T;

  const SwitchingPolicy policy{config.mode, config.M};
  LoopState state(make_bank(config, plant), TrackingMemory(config.T, config.beta));
  UniformStream scaling_stream(config.seed, Substream::reference_scaling);

  const Eigen::Index b_col = plant.p;
  const auto bank_min_b = [&]() {
    double lo = state.bank.tables.front().estimates()(0, b_col);
    for (const EstimateTable& table : state.bank.tables)
      lo = std::min(lo, table.estimates().col(b_col).minCoeff());
    return lo;
  };

  ExperimentReport report;
  report.config = config;
  report.iterations.reserve(config.K);
  report.min_stored_b = bank_min_b();

  for (int k = 1; k <= config.K; ++k) {
    std::optional<double> scaling;
    if (config.reference == ReferenceKind::iteration_varying_uniform) {
      scaling = scaling_stream.next(ref.scaling_lo, ref.scaling_hi);
      report.scaling_draws.push_back(*scaling);
    }
    const ReferenceTrajectory traj = reference_trajectory(ref, scaling);
    report.iterations.push_back(run_iteration(k, plant, traj, policy, config, state));
    report.min_stored_b = std::min(report.min_stored_b, bank_min_b());
  }

  Eigen::VectorXd track_peaks(config.K), ident_peaks(config.K);
  for (int k = 0; k < config.K; ++k) {
    track_peaks(k) = report.iterations[k].max_track_err;
    ident_peaks(k) = report.iterations[k].max_ident_err;
  }
  report.rms_track = rms_metric(track_peaks);
  report.rms_ident = rms_metric(ident_peaks);

  const int window = std::min(10, config.K);
  report.head_window_max_sel_err = Eigen::VectorXd::Zero(config.T);
  report.tail_window_max_sel_err = Eigen::VectorXd::Zero(config.T);
  for (int t = 0; t < config.T; ++t) {
    for (int k = 0; k < window; ++k) {
      report.head_window_max_sel_err(t) = std::max(
          report.head_window_max_sel_err(t), std::abs(report.iterations[k].sel_err(t)));
      report.tail_window_max_sel_err(t) =
          std::max(report.tail_window_max_sel_err(t),
                   std::abs(report.iterations[config.K - 1 - k].sel_err(t)));
    }
  }
  return report;
}

double rms_metric(const Eigen::VectorXd& inf_norms) {
  if (inf_norms.size() < 1) throw ContractViolation("rms_metric needs at least one entry");
  return std::sqrt(inf_norms.squaredNorm() / static_cast<double>(inf_norms.size()));
}

BatchResult batch_run(const ExperimentConfig& config, const std::vector<std::uint64_t>& seeds) {
  if (seeds.empty()) throw ContractViolation("batch_run needs a non-empty seed list");
  BatchResult result;
  result.rows.reserve(seeds.size());
  for (const std::uint64_t seed : seeds) {
    ExperimentConfig c = config;
    c.seed = seed;
    const ExperimentReport report = run_experiment(c);
    BatchRow row;
    row.seed = seed;
    row.rms_track = report.rms_track;
    row.rms_ident = report.rms_ident;
    row.final_max_track = report.iterations.back().max_track_err;
    row.final_max_ident = report.iterations.back().max_ident_err;
    result.rows.push_back(row);
  }

  auto aggregate = [&](auto getter, double& mean, double& lo, double& hi) {
    mean = 0.0;
    lo = getter(result.rows.front());
    hi = lo;
    for (const BatchRow& row : result.rows) {
      const double v = getter(row);
      mean += v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    mean /= static_cast<double>(result.rows.size());
  };
  aggregate([](const BatchRow& r) { return r.rms_track; }, result.mean_rms_track,
            result.min_rms_track, result.max_rms_track);
  aggregate([](const BatchRow& r) { return r.rms_ident; }, result.mean_rms_ident,
            result.min_rms_ident, result.max_rms_ident);
  return result;
}

}  // namespace ailc
