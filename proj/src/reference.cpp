#include "ailc/reference.hpp"

#include <cmath>
#include <numbers>

#include "ailc/errors.hpp"

namespace ailc {

namespace {

// Base target curve: pi^2 (2 - 3 sin^3(a)) sin(a) / 10 with a = 2 pi t / T.
double base_curve(int t, int horizon) {
  const double a = 2.0 * std::numbers::pi * t / horizon;
  const double s = std::sin(a);
  return std::numbers::pi * std::numbers::pi * (2.0 - 3.0 * s * s * s) * s / 10.0;
}

}  // namespace

ReferenceTrajectory reference_trajectory(const ReferenceSpec& spec,
                                         std::optional<double> scaling) {
  if (spec.horizon < 1) throw ConfigError("reference horizon must be >= 1");
  if (spec.scaling_lo > spec.scaling_hi)
    throw ConfigError("reference scaling bounds are inverted");

  double scale = 1.0;
  if (spec.kind == ReferenceKind::iteration_varying_uniform) {
    if (!scaling)
      throw ConfigError("iteration-varying reference requires a scaling sample");
    if (*scaling < spec.scaling_lo || *scaling > spec.scaling_hi)
      throw ContractViolation("scaling sample outside [lo, hi]");
    scale = *scaling;
  }

  const int T = spec.horizon;
  ReferenceTrajectory traj;
  traj.x_m.resize(T + 1);
  for (int t = 0; t <= T; ++t) traj.x_m(t) = scale * base_curve(t, T);
  // The reference recursion x_{n,m}(t+1) = rho(t) forces rho from the target.
  traj.rho = traj.x_m.tail(T);
  return traj;
}

}  // namespace ailc
