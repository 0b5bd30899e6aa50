#pragma once

#include <Eigen/Core>

#include "ailc/errors.hpp"

namespace ailc {

/// Stacked unknown-parameter vector [theta1^T, b, d]^T of length p+2.
///
/// theta1 multiplies the regression nonlinearity, b the control input, d is
/// the additive disturbance term. Both the true plant parameters and their
/// per-sample estimates use this layout.
class ParameterVector {
public:
  ParameterVector() = default;

  ParameterVector(const Eigen::VectorXd& theta1, double b, double d)
      : v_(theta1.size() + 2) {
    v_.head(theta1.size()) = theta1;
    v_(theta1.size()) = b;
    v_(theta1.size() + 1) = d;
  }

  static ParameterVector from_flat(const Eigen::VectorXd& flat) {
    if (flat.size() < 2) throw ContractViolation("ParameterVector needs length >= 2 (p >= 0)");
    ParameterVector out;
    out.v_ = flat;
    return out;
  }

  Eigen::Index p() const { return v_.size() - 2; }
  Eigen::Index size() const { return v_.size(); }

  auto theta1() const { return v_.head(p()); }
  double b() const { return v_(p()); }
  double d() const { return v_(p() + 1); }

  const Eigen::VectorXd& flat() const { return v_; }

private:
  Eigen::VectorXd v_;
};

/// Stacked known regression vector [xi^T, u, 1]^T of length p+2.
/// The trailing 1 is structural, so ||phi||^2 >= 1 always.
class RegressionVector {
public:
  RegressionVector() = default;

  RegressionVector(const Eigen::VectorXd& xi, double u) : v_(xi.size() + 2) {
    v_.head(xi.size()) = xi;
    v_(xi.size()) = u;
    v_(xi.size() + 1) = 1.0;
  }

  static RegressionVector from_flat(const Eigen::VectorXd& flat) {
    if (flat.size() < 2) throw ContractViolation("RegressionVector needs length >= 2");
    if (flat(flat.size() - 1) != 1.0)
      throw ContractViolation("RegressionVector last element must be exactly 1");
    RegressionVector out;
    out.v_ = flat;
    return out;
  }

  Eigen::Index p() const { return v_.size() - 2; }
  Eigen::Index size() const { return v_.size(); }

  auto xi() const { return v_.head(p()); }
  double u() const { return v_(p()); }

  const Eigen::VectorXd& flat() const { return v_; }
  double squared_norm() const { return v_.squaredNorm(); }

private:
  Eigen::VectorXd v_;
};

/// Shared inner product for plant propagation and model prediction. Routing
/// both through one call keeps a perfect-model identification error at
/// exactly zero, bit for bit.
inline double stacked_inner(const Eigen::VectorXd& theta, const Eigen::VectorXd& phi) {
  if (theta.size() != phi.size())
    throw ContractViolation("parameter/regressor dimension mismatch: " +
                            std::to_string(theta.size()) + " vs " + std::to_string(phi.size()));
  return theta.dot(phi);
}

}  // namespace ailc
