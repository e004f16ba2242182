#pragma once

#include "ddp/problem.hpp"
#include "ddp/systems/benchmark_spec.hpp"

namespace ddp::bench {

struct Cartpole {
  OCProblem problem;
  BenchmarkSpec spec;
};

/// Cart-pole swing toward x_d = [0, 0, pi, 0] under explicit-Euler dynamics.
/// Learnable theta = [m_c, m_p, l, theta_x(4)] plus [x_ub, f_ub] when the
/// position/force bound constraints are enabled. theta_u is fixed at 0.1.
Cartpole make_cartpole(bool constrained = true, int horizon = 12, double dt = 0.05);

}  // namespace ddp::bench
