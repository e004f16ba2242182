#pragma once

#include <string>
#include <vector>

#include "ddp/linalg.hpp"

namespace ddp::bench {

/// Static description of a registered benchmark system: dimensions, ground
/// truth, learnable-parameter layout and defaults. theta_star values for the
/// nonlinear systems are artifact defaults (configurable via overrides).
struct BenchmarkSpec {
  std::string name;
  int n_x = 0, n_u = 0, n_theta = 0, n_in = 0, n_eq = 0;
  int N = 0;
  double dt = 0.05;
  Vector x0;
  Vector theta_star;
  Vector theta_lo, theta_hi;  // projection box for the learners
  bool constrained = false;
  std::vector<std::string> theta_labels;
  bool linear_quadratic = false;  // LQR-structured (linear f, quadratic c)
};

}  // namespace ddp::bench
