#pragma once

#include <Eigen/Core>
#include <functional>
#include <string>

#include "ailc/types.hpp"

namespace ailc {

/// The four simulated first-order example systems.
enum class BuiltinPlant { LTI, LTV_D, NL, NL_D };

/// How the trigonometric time argument in the b(t) and d(t) schedules is
/// evaluated. `literal` uses sin(2*pi*t) with the integer sample index, which
/// degenerates to near-constants; `normalized` uses sin(2*pi*t/T) so the
/// schedule sweeps one full period over the horizon.
enum class ScheduleVariant { literal, normalized };

BuiltinPlant parse_builtin_plant(const std::string& name);
std::string to_string(BuiltinPlant name);
ScheduleVariant parse_schedule_variant(const std::string& name);
std::string to_string(ScheduleVariant v);

/// Closed description of an n-th order discrete plant in regression form:
/// shift states, then x_n(t+1) = theta(t)^T phi(t).
struct PlantSpec {
  int order = 1;                                            // n
  int p = 1;                                                // regressor dimension
  std::string regression_name;                              // e.g. "identity", "sin_squared"
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> regression_fn;
  std::function<ParameterVector(int)> parameter_schedule;   // sample index -> true theta(t)
  double b_min = 0.1;
  Eigen::VectorXd initial_state;                            // length n
  int horizon = 100;                                        // T; schedules defined on {0..T-1}
  std::string name = "custom";
};

/// Checks the spec's structural invariants by exhaustive evaluation over its
/// finite horizon: b(t) >= b_min for every t, regressor length p, state
/// length n. Throws ConfigError on failure.
void validate_plant_spec(const PlantSpec& spec);

/// Advances the plant one sample: pure shift on the top n-1 components, then
/// x_n(t+1) = theta(t)^T phi with phi = [xi(x), u, 1].
Eigen::VectorXd plant_step(const Eigen::VectorXd& state, double u, int t, const PlantSpec& spec);

/// Returns one of the four example systems, validated over `horizon`.
PlantSpec builtin_plant(BuiltinPlant name, ScheduleVariant variant = ScheduleVariant::literal,
                        int horizon = 100, double b_min = 0.1);

}  // namespace ailc
