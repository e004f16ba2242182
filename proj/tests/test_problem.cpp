#include "ddp/problem.hpp"

#include <gtest/gtest.h>

#include "ddp/fd_check.hpp"
#include "ddp/systems/cartpole.hpp"
#include "ddp/systems/lqr_ioc.hpp"
#include "ddp/systems/scalar_example.hpp"
#include "test_util.hpp"

namespace ddp {
namespace {

using test::make_rng;
using test::random_vector;

Trajectory scalar_optimal_trajectory() {
  Trajectory t;
  t.states = {Vector::Constant(1, 1.0), Vector::Constant(1, 0.4), Vector::Constant(1, 0.2)};
  t.controls = {Vector::Constant(1, -0.6), Vector::Constant(1, -0.2)};
  t.duals_in.assign(2, Vector::Zero(0));
  t.duals_eq.assign(2, Vector::Zero(0));
  return t;
}

TEST(EvaluateCost, ScalarWorkedExample) {
  auto sys = bench::make_scalar_example();
  const double j = evaluate_cost(sys.problem, scalar_optimal_trajectory(), sys.spec.theta_star);
  EXPECT_NEAR(j, 0.80, 1e-12);
}

TEST(EvaluateCost, AllZeroTrajectoryIsZero) {
  auto sys = bench::make_scalar_example();
  Trajectory t;
  t.states.assign(3, Vector::Zero(1));
  t.controls.assign(2, Vector::Zero(1));
  EXPECT_DOUBLE_EQ(evaluate_cost(sys.problem, t, sys.spec.theta_star), 0.0);
}

TEST(EvaluateCost, DegenerateHorizonTerminalOnly) {
  auto sys = bench::make_scalar_example();
  sys.problem.N = 0;
  Trajectory t;
  t.states = {Vector::Constant(1, 3.0)};
  EXPECT_DOUBLE_EQ(evaluate_cost(sys.problem, t, sys.spec.theta_star), 0.5 * 9.0);
}

TEST(EvaluateCost, DimensionMismatchThrows) {
  auto sys = bench::make_scalar_example();
  Trajectory t;
  t.states.assign(2, Vector::Zero(1));  // wrong: needs N+1 = 3
  t.controls.assign(2, Vector::Zero(1));
  EXPECT_THROW(evaluate_cost(sys.problem, t, sys.spec.theta_star), DimensionError);
}

TEST(Rollout, ScalarTableOne) {
  auto sys = bench::make_scalar_example();
  const Trajectory t =
      rollout(sys.problem, Vector::Constant(1, 1.0),
              {Vector::Constant(1, -0.6), Vector::Constant(1, -0.2)}, sys.spec.theta_star);
  EXPECT_NEAR(t.states[0][0], 1.0, 1e-15);
  EXPECT_NEAR(t.states[1][0], 0.4, 1e-15);
  EXPECT_NEAR(t.states[2][0], 0.2, 1e-15);
}

TEST(Rollout, ZeroFixedPoint) {
  auto sys = bench::make_scalar_example();
  const Trajectory t = rollout(sys.problem, Vector::Zero(1),
                               std::vector<Vector>(2, Vector::Zero(1)), sys.spec.theta_star);
  for (const auto& x : t.states) EXPECT_EQ(x, Vector::Zero(1));
}

TEST(Rollout, CartpoleEquilibriumAtHangingRest) {
  // At q = 0, qdot = 0, f = 0 both accelerations vanish, so an Euler step
  // leaves the state unchanged.
  auto sys = bench::make_cartpole(false);
  Vector x0 = Vector::Zero(4);
  sys.problem.N = 1;
  const Trajectory t =
      rollout(sys.problem, x0, {Vector::Zero(1)}, sys.spec.theta_star);
  EXPECT_LT((t.states[1] - x0).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Rollout, DeterministicBitwise) {
  auto sys = bench::make_cartpole(false);
  auto rng = make_rng(77);
  std::vector<Vector> controls(sys.problem.N);
  for (auto& u : controls) u = random_vector(rng, 1);
  const Trajectory a = rollout(sys.problem, sys.spec.x0, controls, sys.spec.theta_star);
  const Trajectory b = rollout(sys.problem, sys.spec.x0, controls, sys.spec.theta_star);
  for (int k = 0; k <= sys.problem.N; ++k) EXPECT_EQ(a.states[k], b.states[k]);
  EXPECT_EQ(evaluate_cost(sys.problem, a, sys.spec.theta_star),
            evaluate_cost(sys.problem, b, sys.spec.theta_star));
}

TEST(DerivativesAt, LqrJacobiansAreConstant) {
  auto sys = bench::make_lqr_ioc(false);
  auto rng = make_rng(20);
  const Vector theta = sys.spec.theta_star;
  const StageDerivatives d1 = derivatives_at(sys.problem, 0, random_vector(rng, 2),
                                             random_vector(rng, 1), theta);
  const StageDerivatives d2 = derivatives_at(sys.problem, 3, random_vector(rng, 2),
                                             random_vector(rng, 1), theta);
  EXPECT_TRUE(d1.fx.isApprox(sys.A));
  EXPECT_TRUE(d1.fu.isApprox(sys.B));
  EXPECT_TRUE(d2.fx.isApprox(sys.A));
  EXPECT_TRUE(d2.fu.isApprox(sys.B));
}

TEST(DerivativesAt, QuadraticCostBlocks) {
  auto sys = bench::make_lqr_ioc(false);
  auto rng = make_rng(21);
  const Vector x = random_vector(rng, 2), u = random_vector(rng, 1);
  const Vector theta = (Vector(3) << 0.4, 0.7, 1.3).finished();
  const StageDerivatives d = derivatives_at(sys.problem, 0, x, u, theta);
  Matrix cxx_want = Matrix::Zero(2, 2);
  cxx_want(0, 0) = 2.0 * theta[0];
  cxx_want(1, 1) = 2.0 * theta[1];
  EXPECT_TRUE(d.cxx.isApprox(cxx_want, 1e-12));
  EXPECT_NEAR(d.cuu(0, 0), 2.0 * theta[2], 1e-12);
  // theta coupling: c_xtheta(i, i) = 2 x_i
  EXPECT_NEAR(d.cxtheta(0, 0), 2.0 * x[0], 1e-12);
  EXPECT_NEAR(d.cxtheta(1, 1), 2.0 * x[1], 1e-12);
  EXPECT_NEAR(d.cutheta(0, 2), 2.0 * u[0], 1e-12);
}

TEST(FdDerivatives, ExactOnLinearFirstOrder) {
  auto sys = bench::make_lqr_ioc(false);
  auto rng = make_rng(22);
  const Vector x = random_vector(rng, 2), u = random_vector(rng, 1);
  const StageDerivatives fd = fd_derivatives_at(sys.problem, 0, x, u, sys.spec.theta_star);
  EXPECT_LT(test::max_abs_diff(fd.fx, sys.A), 1e-9);
  EXPECT_LT(test::max_abs_diff(fd.fu, sys.B), 1e-9);
}

TEST(FdDerivatives, QuadraticHessian) {
  auto sys = bench::make_lqr_ioc(false);
  auto rng = make_rng(23);
  const Vector x = random_vector(rng, 2), u = random_vector(rng, 1);
  const StageDerivatives an = derivatives_at(sys.problem, 0, x, u, sys.spec.theta_star);
  const StageDerivatives fd = fd_derivatives_at(sys.problem, 0, x, u, sys.spec.theta_star);
  EXPECT_LT(test::max_abs_diff(fd.cxx, an.cxx), 1e-7);
  EXPECT_LT(test::max_abs_diff(fd.cuu, an.cuu), 1e-7);
}

void expect_stage_agreement(const OCProblem& p, const StageDerivatives& an,
                            const StageDerivatives& fd, double tol1, double tol2) {
  EXPECT_LT(test::max_rel_diff(an.cx, fd.cx), tol1);
  EXPECT_LT(test::max_rel_diff(an.cu, fd.cu), tol1);
  EXPECT_LT(test::max_rel_diff(an.ctheta, fd.ctheta), tol1);
  EXPECT_LT(test::max_rel_diff(an.fx, fd.fx), tol1);
  EXPECT_LT(test::max_rel_diff(an.fu, fd.fu), tol1);
  EXPECT_LT(test::max_rel_diff(an.ftheta, fd.ftheta), tol1);
  EXPECT_LT(test::max_rel_diff(an.cxx, fd.cxx), tol2);
  EXPECT_LT(test::max_rel_diff(an.cux, fd.cux), tol2);
  EXPECT_LT(test::max_rel_diff(an.cuu, fd.cuu), tol2);
  EXPECT_LT(test::max_rel_diff(an.cxtheta, fd.cxtheta), tol2);
  EXPECT_LT(test::max_rel_diff(an.cutheta, fd.cutheta), tol2);
  EXPECT_LT(test::max_rel_diff(an.cthetatheta, fd.cthetatheta), tol2);
  for (int i = 0; i < p.n_x; ++i) {
    EXPECT_LT(test::max_rel_diff(an.fxx[i], fd.fxx[i]), tol2);
    EXPECT_LT(test::max_rel_diff(an.fux[i], fd.fux[i]), tol2);
    EXPECT_LT(test::max_rel_diff(an.fuu[i], fd.fuu[i]), tol2);
    EXPECT_LT(test::max_rel_diff(an.fxtheta[i], fd.fxtheta[i]), tol2);
    EXPECT_LT(test::max_rel_diff(an.futheta[i], fd.futheta[i]), tol2);
    EXPECT_LT(test::max_rel_diff(an.fthetatheta[i], fd.fthetatheta[i]), tol2);
  }
  for (int i = 0; i < p.n_in; ++i) {
    EXPECT_LT(test::max_rel_diff(an.gx.row(i), fd.gx.row(i)), tol1);
    EXPECT_LT(test::max_rel_diff(an.gu.row(i), fd.gu.row(i)), tol1);
    EXPECT_LT(test::max_rel_diff(an.gtheta.row(i), fd.gtheta.row(i)), tol1);
    EXPECT_LT(test::max_rel_diff(an.gxx[i], fd.gxx[i]), tol2);
    EXPECT_LT(test::max_rel_diff(an.guu[i], fd.guu[i]), tol2);
  }
}

TEST(FdDerivatives, CartpoleAnalyticAgreement) {
  auto sys = bench::make_cartpole(true);
  auto rng = make_rng(24);
  for (int trial = 0; trial < 25; ++trial) {
    const Vector x = random_vector(rng, 4, 0.8);
    const Vector u = random_vector(rng, 1, 2.0);
    Vector theta = sys.spec.theta_star;
    theta += 0.1 * random_vector(rng, theta.size()).cwiseProduct(theta);
    const StageDerivatives an = derivatives_at(sys.problem, 0, x, u, theta);
    const StageDerivatives fd = fd_derivatives_at(sys.problem, 0, x, u, theta);
    expect_stage_agreement(sys.problem, an, fd, 1e-5, 1e-3);
  }
}

TEST(FdDerivatives, CartpoleSecondDerivativeTensorClose) {
  auto sys = bench::make_cartpole(false);
  auto rng = make_rng(25);
  const Vector x = random_vector(rng, 4, 0.5);
  const Vector u = random_vector(rng, 1, 1.0);
  const StageDerivatives an = derivatives_at(sys.problem, 0, x, u, sys.spec.theta_star);
  const StageDerivatives fd = fd_derivatives_at(sys.problem, 0, x, u, sys.spec.theta_star, 1e-4);
  for (int i = 0; i < 4; ++i) {
    EXPECT_LT(test::max_abs_diff(an.fxx[i], fd.fxx[i]), 1e-4);
  }
}

TEST(FdDerivatives, TerminalAgreement) {
  auto sys = bench::make_cartpole(false);
  auto rng = make_rng(26);
  const Vector x = random_vector(rng, 4, 0.5);
  const TerminalDerivatives an =
      sys.problem.terminal_derivs(x, sys.spec.theta_star, DerivScope::kFull);
  const TerminalDerivatives fd = fd_terminal_derivatives_at(sys.problem, x, sys.spec.theta_star);
  EXPECT_LT(test::max_rel_diff(an.cx, fd.cx), 1e-5);
  EXPECT_LT(test::max_rel_diff(an.cxx, fd.cxx), 1e-3);
  EXPECT_LT(test::max_rel_diff(an.cxtheta, fd.cxtheta), 1e-3);
}

}  // namespace
}  // namespace ddp
