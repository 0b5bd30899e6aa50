#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "ailc/control.hpp"
#include "ailc/errors.hpp"
#include "doctest.h"

using namespace ailc;

namespace {

ParameterVector params(double theta1, double b, double d) {
  return ParameterVector(Eigen::VectorXd::Constant(1, theta1), b, d);
}

}  // namespace

TEST_CASE("control_input: feedforward with perfect LTI estimates") {
  // x = 0, rho = 0.1239, theta_hat = [0.5, 1, 0], no damping history:
  // u = (0.2*0 + 0.1239 - 0 - 0) / 1.
  const double u = control_input(params(0.5, 1.0, 0.0), Eigen::VectorXd::Zero(1), 0.1239,
                                 0.0, 0.2);
  CHECK(u == doctest::Approx(0.1239).epsilon(1e-15));
}

TEST_CASE("control_input: exact cancellation gives zero input") {
  // theta1^T xi + d_hat = rho and no previous error; dyadic values so the
  // cancellation is exact in floating point.
  const Eigen::VectorXd xi = Eigen::VectorXd::Constant(1, 1.0);
  const double u = control_input(params(0.5, 2.5, 0.25), xi, 0.75, 0.0, 0.3);
  CHECK(u == 0.0);
}

TEST_CASE("control_input: homogeneity in 1/b_hat") {
  const Eigen::VectorXd xi = Eigen::VectorXd::Constant(1, 0.7);
  const double u1 = control_input(params(1.2, 2.0, -0.3), xi, 0.9, 0.5, 0.2);
  const double u2 = control_input(params(1.2, 4.0, -0.3), xi, 0.9, 0.5, 0.2);
  CHECK(u2 == doctest::Approx(0.5 * u1).epsilon(1e-15));
}

TEST_CASE("control_input: non-positive b_hat is an internal fault") {
  CHECK_THROWS_AS(
      control_input(params(1.0, 0.0, 0.0), Eigen::VectorXd::Zero(1), 0.0, 0.0, 0.2),
      InvariantViolation);
  CHECK_THROWS_AS(
      control_input(params(1.0, -2.0, 0.0), Eigen::VectorXd::Zero(1), 0.0, 0.0, 0.2),
      InvariantViolation);
}

TEST_CASE("tracking_error_recursion_check: substitution examples") {
  CHECK(tracking_error_recursion_check(0.0, 0.0, 0.0, 0.2));
  CHECK(tracking_error_recursion_check(0.5, 0.3, 1.0, 0.2));  // 0.3 + 0.2*1
  CHECK_FALSE(tracking_error_recursion_check(0.6, 0.3, 1.0, 0.2));
  // Near-zero magnitudes compare absolutely (unit floor), so a 1e-15
  // residue on otherwise O(1) arithmetic still passes.
  CHECK(tracking_error_recursion_check(1e-15, 0.0, 0.0, 0.2));
}

TEST_CASE("perfect forcing decays geometrically under the damping recursion") {
  // With e_hat = 0 the recursion e_k = beta * e_{k-1} gives beta^k * c.
  const double beta = 0.2, c = 3.0;
  double e = c;
  for (int k = 1; k <= 12; ++k) {
    e = 0.0 + beta * e;
    CHECK(e == doctest::Approx(std::pow(beta, k) * c).epsilon(1e-12));
    CHECK(tracking_error_recursion_check(e, 0.0, e / beta, beta));
  }
}

TEST_CASE("TrackingMemory validates beta and horizon") {
  CHECK_THROWS_AS(TrackingMemory(100, 0.0), ConfigError);
  CHECK_THROWS_AS(TrackingMemory(100, 1.0), ConfigError);
  CHECK_THROWS_AS(TrackingMemory(0, 0.2), ConfigError);
  const TrackingMemory memory(100, 0.2);
  CHECK(memory.e_prev.size() == 100);
  CHECK(memory.e_prev.cwiseAbs().maxCoeff() == 0.0);
}
