#include "ailc/plant.hpp"

#include <cmath>
#include <numbers>

#include "ailc/errors.hpp"

namespace ailc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double cube(double x) { return x * x * x; }

// Time argument of the sin(2 pi t) factors in the b and d schedules.
double trig_arg(int t, int horizon, ScheduleVariant variant) {
  return variant == ScheduleVariant::literal ? kTwoPi * t : kTwoPi * t / horizon;
}

}  // namespace

BuiltinPlant parse_builtin_plant(const std::string& name) {
  if (name == "LTI") return BuiltinPlant::LTI;
  if (name == "LTV_D") return BuiltinPlant::LTV_D;
  if (name == "NL") return BuiltinPlant::NL;
  if (name == "NL_D") return BuiltinPlant::NL_D;
  throw ConfigError("unknown plant '" + name + "' (expected LTI, LTV_D, NL or NL_D)");
}

std::string to_string(BuiltinPlant name) {
  switch (name) {
    case BuiltinPlant::LTI: return "LTI";
    case BuiltinPlant::LTV_D: return "LTV_D";
    case BuiltinPlant::NL: return "NL";
    case BuiltinPlant::NL_D: return "NL_D";
  }
  return "?";
}

ScheduleVariant parse_schedule_variant(const std::string& name) {
  if (name == "literal") return ScheduleVariant::literal;
  if (name == "normalized") return ScheduleVariant::normalized;
  throw ConfigError("unknown schedule variant '" + name + "' (expected literal or normalized)");
}

std::string to_string(ScheduleVariant v) {
  return v == ScheduleVariant::literal ? "literal" : "normalized";
}

void validate_plant_spec(const PlantSpec& spec) {
  if (spec.order < 1) throw ConfigError("plant order must be >= 1");
  if (spec.p < 1) throw ConfigError("regressor dimension must be >= 1");
  if (spec.b_min <= 0.0) throw ConfigError("b_min must be positive");
  if (spec.horizon < 1) throw ConfigError("plant horizon must be >= 1");
  if (spec.initial_state.size() != spec.order)
    throw ConfigError("initial state length " + std::to_string(spec.initial_state.size()) +
                      " does not match plant order " + std::to_string(spec.order));
  const Eigen::VectorXd xi = spec.regression_fn(spec.initial_state);
  if (xi.size() != spec.p)
    throw ConfigError("regression_fn output length " + std::to_string(xi.size()) +
                      " does not match p = " + std::to_string(spec.p));
  for (int t = 0; t < spec.horizon; ++t) {
    const ParameterVector theta = spec.parameter_schedule(t);
    if (theta.size() != spec.p + 2)
      throw ConfigError("parameter schedule at t=" + std::to_string(t) + " has length " +
                        std::to_string(theta.size()) + ", expected " + std::to_string(spec.p + 2));
    if (theta.b() < spec.b_min)
      throw ConfigError("parameter schedule violates b(t) >= b_min at t=" + std::to_string(t));
  }
}

Eigen::VectorXd plant_step(const Eigen::VectorXd& state, double u, int t, const PlantSpec& spec) {
  if (t < 0 || t >= spec.horizon)
    throw ConfigError("sample index " + std::to_string(t) + " outside horizon {0.." +
                      std::to_string(spec.horizon - 1) + "}");
  if (state.size() != spec.order)
    throw ContractViolation("state length " + std::to_string(state.size()) +
                            " does not match plant order " + std::to_string(spec.order));

  const int n = spec.order;
  Eigen::VectorXd next(n);
  if (n > 1) next.head(n - 1) = state.tail(n - 1);

  const RegressionVector phi(spec.regression_fn(state), u);
  const ParameterVector theta = spec.parameter_schedule(t);
  next(n - 1) = stacked_inner(theta.flat(), phi.flat());
  return next;
}

PlantSpec builtin_plant(BuiltinPlant name, ScheduleVariant variant, int horizon, double b_min) {
  PlantSpec spec;
  spec.order = 1;
  spec.p = 1;
  spec.b_min = b_min;
  spec.horizon = horizon;
  spec.initial_state = Eigen::VectorXd::Zero(1);
  spec.name = to_string(name);

  const auto identity = [](const Eigen::VectorXd& x) -> Eigen::VectorXd { return x; };
  const auto sin_squared = [](const Eigen::VectorXd& x) -> Eigen::VectorXd {
    Eigen::VectorXd xi(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) xi(i) = std::sin(x(i)) * std::sin(x(i));
    return xi;
  };

  const auto scalar_theta = [](double theta1, double b, double d) {
    return ParameterVector(Eigen::VectorXd::Constant(1, theta1), b, d);
  };

  switch (name) {
    case BuiltinPlant::LTI:
      spec.regression_name = "identity";
      spec.regression_fn = identity;
      spec.parameter_schedule = [scalar_theta](int) { return scalar_theta(0.5, 1.0, 0.0); };
      break;
    case BuiltinPlant::LTV_D:
      spec.regression_name = "identity";
      spec.regression_fn = identity;
      spec.parameter_schedule = [scalar_theta, horizon, variant](int t) {
        const double a = trig_arg(t, horizon, variant);
        return scalar_theta(1.0 + 0.5 * std::sin(t), 3.0 + 0.5 * std::sin(a), cube(std::sin(a)));
      };
      break;
    case BuiltinPlant::NL:
      spec.regression_name = "sin_squared";
      spec.regression_fn = sin_squared;
      spec.parameter_schedule = [scalar_theta, horizon, variant](int t) {
        const double a = trig_arg(t, horizon, variant);
        return scalar_theta(1.0 + 0.5 * std::sin(t), 3.0 + 0.5 * std::sin(a), 0.0);
      };
      break;
    case BuiltinPlant::NL_D:
      spec.regression_name = "sin_squared";
      spec.regression_fn = sin_squared;
      spec.parameter_schedule = [scalar_theta, horizon, variant](int t) {
        const double a = trig_arg(t, horizon, variant);
        return scalar_theta(1.5 + 0.5 * std::sin(t), 3.0 + 0.5 * std::sin(a), cube(std::sin(a)));
      };
      break;
  }

  validate_plant_spec(spec);
  return spec;
}

}  // namespace ailc
