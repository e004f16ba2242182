#pragma once

#include <cstdint>
#include <random>

#include "ddp/linalg.hpp"

namespace ddp {

/// Deterministic standard-normal stream. Box-Muller over mt19937_64 so a
/// seed reproduces the same sequence bit-for-bit regardless of the standard
/// library's distribution internals.
class GaussianStream {
 public:
  explicit GaussianStream(uint64_t seed) : rng_(seed) {}

  double next();
  Vector next_vector(Eigen::Index n);

 private:
  std::mt19937_64 rng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Process-noise description for demonstration generation and rollouts:
///   x+ = f(x, u) .* (1 + sigma_mult * eps) + sigma_add * eps' + additive[k+1]
/// with eps, eps' componentwise standard normal. `additive` (when non-empty,
/// indexed by the state index k = 0..N) injects a fixed known disturbance,
/// used by the worked scalar example.
struct NoiseModel {
  double sigma_mult = 0.0;
  double sigma_add = 0.0;
  std::vector<Vector> additive;

  bool stochastic() const { return sigma_mult != 0.0 || sigma_add != 0.0; }
  Vector apply(const Vector& next_state, int next_index, GaussianStream& stream) const;
};

}  // namespace ddp
