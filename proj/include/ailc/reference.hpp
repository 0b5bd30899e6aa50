#pragma once

#include <Eigen/Core>
#include <optional>

namespace ailc {

enum class ReferenceKind { iteration_invariant, iteration_varying_uniform };

/// Target-trajectory family. The base trajectory is the closed-form curve
/// pi^2 (2 - 3 sin^3(2 pi t / T)) sin(2 pi t / T) / 10; the iteration-varying
/// kind scales it by a per-iteration sample drawn uniformly from
/// [scaling_lo, scaling_hi].
struct ReferenceSpec {
  ReferenceKind kind = ReferenceKind::iteration_invariant;
  int horizon = 100;  // T
  double scaling_lo = -0.5;
  double scaling_hi = 0.5;
};

/// Reference state trajectory plus the forcing sequence that reproduces it:
/// x_m defined on samples {0..T}, rho on {0..T-1} with x_m(t+1) = rho(t).
struct ReferenceTrajectory {
  Eigen::VectorXd x_m;  // length T+1
  Eigen::VectorXd rho;  // length T
};

/// Evaluates the reference for one iteration. For the iteration-varying kind
/// the caller must supply the scaling sample (the harness draws it from the
/// seeded stream); for the invariant kind it must be absent.
ReferenceTrajectory reference_trajectory(const ReferenceSpec& spec,
                                         std::optional<double> scaling = std::nullopt);

}  // namespace ailc
