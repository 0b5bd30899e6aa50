#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "ailc/errors.hpp"
#include "ailc/estimation.hpp"
#include "doctest.h"

using namespace ailc;

namespace {

Eigen::VectorXd vec3(double a, double b, double c) {
  Eigen::VectorXd v(3);
  v << a, b, c;
  return v;
}

struct TestRng {
  std::mt19937_64 engine;
  explicit TestRng(std::uint64_t seed) : engine(seed) {}
  double uniform(double lo, double hi) {
    return lo + (static_cast<double>(engine() >> 11) * 0x1.0p-53) * (hi - lo);
  }
};

}  // namespace

TEST_CASE("predict: inner product of estimate and regressor") {
  const RegressionVector phi(Eigen::VectorXd::Constant(1, 2.0), 1.0);  // [2, 1, 1]
  CHECK(predict(ParameterVector::from_flat(vec3(0, 0, 0)), phi) == 0.0);
  CHECK(predict(ParameterVector::from_flat(vec3(0.5, 1.0, 0.0)), phi) == 2.0);

  const RegressionVector phi5(Eigen::VectorXd::Constant(3, 1.0), 1.0);
  CHECK_THROWS_AS(predict(ParameterVector::from_flat(vec3(0.5, 1.0, 0.0)), phi5),
                  ContractViolation);
}

TEST_CASE("identification_error: subtraction contract and theta-tilde identity") {
  const RegressionVector phi(Eigen::VectorXd::Constant(1, 2.0), 1.0);
  const ParameterVector theta_hat = ParameterVector::from_flat(vec3(0.5, 1.0, 0.0));
  CHECK(identification_error(2.0, theta_hat, phi) == 0.0);  // perfect estimate
  CHECK(identification_error(1.0, ParameterVector::from_flat(vec3(0.125, 0, 0)), phi) == 0.75);

  // e_hat equals tilde_theta^T phi when the truth is known.
  TestRng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Eigen::VectorXd truth(4), estimate(4), phi_flat(4);
    for (int i = 0; i < 4; ++i) {
      truth(i) = rng.uniform(-5, 5);
      estimate(i) = rng.uniform(-5, 5);
      phi_flat(i) = rng.uniform(-3, 3);
    }
    phi_flat(3) = 1.0;
    const RegressionVector phi_r = RegressionVector::from_flat(phi_flat);
    const double x_next = truth.dot(phi_flat);
    const double e_hat =
        identification_error(x_next, ParameterVector::from_flat(estimate), phi_r);
    CHECK(e_hat == doctest::Approx((truth - estimate).dot(phi_flat)).epsilon(1e-12));
  }
}

TEST_CASE("project: clamp and pass-through branches") {
  const ParameterVector low = ParameterVector::from_flat(vec3(2.0, 0.5, -1.0));
  const ParameterVector clamped = project(low, 1.0);
  CHECK(clamped.b() == 1.0);
  CHECK(clamped.theta1()(0) == 2.0);
  CHECK(clamped.d() == -1.0);

  const ParameterVector high = ParameterVector::from_flat(vec3(2.0, 2.0, -1.0));
  CHECK(project(high, 1.0).flat() == high.flat());
}

TEST_CASE("project: non-expansion against the truth, randomized oracle") {
  // For any theta with theta.b >= b_min, projection can only move the
  // pre-update vector closer: ||theta - Proj[m]|| <= ||theta - m||.
  TestRng rng(2024);
  const double b_min = 0.1;
  for (int trial = 0; trial < 1000; ++trial) {
    Eigen::VectorXd truth(3), m(3);
    for (int i = 0; i < 3; ++i) {
      truth(i) = rng.uniform(-8, 8);
      m(i) = rng.uniform(-8, 8);
    }
    truth(1) = rng.uniform(b_min, 8.0);
    const Eigen::VectorXd projected = project_flat(m, b_min);
    CHECK((truth - projected).norm() <= (truth - m).norm());
  }
}

TEST_CASE("update_model: zero error is a fixed point") {
  const int T = 8;
  Eigen::MatrixXd estimates(T, 3);
  for (int t = 0; t < T; ++t) estimates.row(t) = vec3(0.3 * t, 1.0 + t, -0.5).transpose();
  const EstimateTable table(0, estimates, 0.1);

  IdentificationRecord record;
  record.phi = Eigen::MatrixXd::Zero(T, 3);
  record.phi.col(2).setOnes();
  record.errors = Eigen::MatrixXd::Zero(1, T);

  const EstimateTable updated = update_model(table, record, 0.1);
  CHECK(updated.estimates() == table.estimates());
}

TEST_CASE("update_model: hand-evaluated single step") {
  // theta_hat = 0, phi = [0, 1, 1], e_hat = 3: the pre-projection vector is
  // 0 + phi * 3 / (1 + 2) = phi, and projection leaves b = 1 alone for
  // b_min = 0.1. The zero start needs a permissive initial bound.
  const EstimateTable table(0, Eigen::MatrixXd::Zero(1, 3), 0.0);

  IdentificationRecord record;
  record.phi = vec3(0.0, 1.0, 1.0).transpose();
  record.errors = Eigen::MatrixXd::Constant(1, 1, 3.0);

  const EstimateTable updated = update_model(table, record, 0.1);
  CHECK(updated.estimates()(0, 0) == 0.0);
  CHECK(updated.estimates()(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(updated.estimates()(0, 2) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("update_model: increment never exceeds the identification error") {
  TestRng rng(5);
  const int T = 40;
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::MatrixXd estimates(T, 3);
    IdentificationRecord record;
    record.phi.resize(T, 3);
    record.errors.resize(1, T);
    for (int t = 0; t < T; ++t) {
      estimates.row(t) = vec3(rng.uniform(-5, 5), rng.uniform(0.1, 5), rng.uniform(-5, 5));
      record.phi.row(t) = vec3(rng.uniform(-20, 20), rng.uniform(-20, 20), 1.0);
      record.errors(0, t) = rng.uniform(-50, 50);
    }
    const EstimateTable table(0, estimates, 0.1);
    const EstimateTable updated = update_model(table, record, 0.1);
    for (int t = 0; t < T; ++t) {
      const double step = (updated.estimates().row(t) - table.estimates().row(t)).norm();
      CHECK(step <= std::abs(record.errors(0, t)) + 1e-12);
      CHECK(step * step <= record.errors(0, t) * record.errors(0, t) + 1e-12);
      CHECK(updated.estimates()(t, 1) >= 0.1);
    }
  }
}

TEST_CASE("update_model: missing samples are a contract violation") {
  const EstimateTable table(0, Eigen::MatrixXd::Constant(4, 3, 1.0), 0.1);
  IdentificationRecord record;
  record.phi = Eigen::MatrixXd::Zero(3, 3);  // one sample short
  record.errors = Eigen::MatrixXd::Zero(1, 4);
  CHECK_THROWS_AS(update_model(table, record, 0.1), ContractViolation);

  record.phi = Eigen::MatrixXd::Zero(4, 3);
  record.errors = Eigen::MatrixXd::Zero(1, 3);
  CHECK_THROWS_AS(update_model(table, record, 0.1), ContractViolation);
}

TEST_CASE("EstimateTable rejects rows that violate the projection bound") {
  Eigen::MatrixXd estimates = Eigen::MatrixXd::Constant(4, 3, 1.0);
  estimates(2, 1) = 0.05;
  CHECK_THROWS_AS(EstimateTable(0, estimates, 0.1), ContractViolation);
}

TEST_CASE("alpha_squared: frozen value and admissible range") {
  CHECK(alpha_squared(2.0) == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
  // ||phi||^2 >= 1 pins alpha^2 into (0, 3/4].
  TestRng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const double s = rng.uniform(1.0, 1e6);
    const double a2 = alpha_squared(s);
    CHECK(a2 > 0.0);
    CHECK(a2 <= 0.75);
  }
  CHECK(alpha_squared(1.0) == 0.75);
}

TEST_CASE("cef_diagnostics: perfect estimates give V = 0 and dV = 0") {
  const int T = 6;
  Eigen::MatrixXd truth(T, 3);
  for (int t = 0; t < T; ++t) truth.row(t) = vec3(0.5, 1.0, 0.0).transpose();

  const EstimateTable table(0, truth, 0.1);
  IdentificationRecord record;
  record.phi = Eigen::MatrixXd::Zero(T, 3);
  record.phi.col(2).setOnes();
  record.errors = Eigen::MatrixXd::Zero(1, T);

  const CefDiagnostics diag = cef_diagnostics(truth, {table}, {table}, record);
  CHECK(diag.v_before.cwiseAbs().maxCoeff() == 0.0);
  CHECK(diag.delta_v.cwiseAbs().maxCoeff() == 0.0);
  CHECK(diag.alpha_sq.minCoeff() == 0.75);  // ||phi||^2 = 1
}

TEST_CASE("cef_diagnostics: update satisfies the energy-decrease bound") {
  // Random single-model updates; dV <= -(alpha e_hat)^2 must hold with
  // equality when projection does not bind.
  TestRng rng(17);
  const int T = 30;
  Eigen::MatrixXd truth(T, 3), estimates(T, 3);
  IdentificationRecord record;
  record.phi.resize(T, 3);
  record.errors.resize(1, T);
  for (int t = 0; t < T; ++t) {
    truth.row(t) = vec3(rng.uniform(-3, 3), rng.uniform(2.5, 3.5), rng.uniform(-1, 1));
    estimates.row(t) = vec3(rng.uniform(-5, 5), rng.uniform(0.1, 5), rng.uniform(-5, 5));
    record.phi.row(t) = vec3(rng.uniform(-4, 4), rng.uniform(-4, 4), 1.0);
    record.errors(0, t) =
        (truth.row(t) - estimates.row(t)).dot(record.phi.row(t));  // e_hat = tilde^T phi
  }
  const EstimateTable before(0, estimates, 0.1);
  const EstimateTable after = update_model(before, record, 0.1);
  const CefDiagnostics diag = cef_diagnostics(truth, {before}, {after}, record);

  for (int t = 0; t < T; ++t) {
    const double scaled = std::sqrt(diag.alpha_sq(t)) * record.errors(0, t);
    CHECK(diag.delta_v(0, t) <= -(scaled * scaled) + 1e-10);
    CHECK(diag.delta_v(0, t) <= 1e-12);
    CHECK(diag.v_before(0, t) >= 0.0);
    CHECK(diag.v_after(0, t) >= 0.0);
    // V recomputable from the stored parametric error.
    CHECK(diag.v_before(0, t) ==
          doctest::Approx(diag.param_err_before[0].row(t).squaredNorm()).epsilon(1e-15));
  }
}
