#pragma once

#include "ddp/problem.hpp"
#include "ddp/systems/benchmark_spec.hpp"

namespace ddp::bench {

/// Two-stage scalar problem
///   min sum_{k=0,1} (theta x_k^2 + u_k^2)/2 + x_2^2/2,  x_{k+1} = x_k + u_k.
/// Closed form: u_0 = -(2 theta + 1)/(2 theta + 3) x_0, u_1 = -x_1 / 2.
struct ScalarExample {
  OCProblem problem;
  BenchmarkSpec spec;
};

ScalarExample make_scalar_example();

/// Closed-form first-stage feedback coefficient u_0 = scalar_gain0(theta) * x_0.
double scalar_gain0(double theta);

}  // namespace ddp::bench
