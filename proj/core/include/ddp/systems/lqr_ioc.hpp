#pragma once

#include "ddp/problem.hpp"
#include "ddp/systems/benchmark_spec.hpp"

namespace ddp::bench {

struct LqrIoc {
  OCProblem problem;
  BenchmarkSpec spec;
  Matrix A;
  Matrix B;
};

/// Planar LQR used for the constrained inverse-optimal-control study:
///   x+ = [[-1,1],[0,1]] x + [1;3] u,
///   c  = theta_1 x_1^2 + theta_2 x_2^2 + theta_3 u^2, c_f = 0,
/// with the bilinear bound |x_1 u| <= 0.1 encoded as two inequality rows
/// when `constrained` is set. The stage cost is theta-linear with features
/// phi = [x_1^2, x_2^2, u^2] exposed through the problem's feature oracle.
LqrIoc make_lqr_ioc(bool constrained = true, int horizon = 50);

}  // namespace ddp::bench
