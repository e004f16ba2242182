#include "ddp/noise.hpp"

#include <cmath>

namespace ddp {

double GaussianStream::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller on uniforms in (0, 1].
  const double inv = 1.0 / (static_cast<double>(rng_.max()) + 1.0);
  const double u1 = (static_cast<double>(rng_()) + 1.0) * inv;
  const double u2 = (static_cast<double>(rng_()) + 1.0) * inv;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Vector GaussianStream::next_vector(Eigen::Index n) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = next();
  return v;
}

Vector NoiseModel::apply(const Vector& next_state, int next_index, GaussianStream& stream) const {
  Vector out = next_state;
  if (sigma_mult != 0.0) {
    const Vector eps = stream.next_vector(out.size());
    out = out.cwiseProduct(Vector::Ones(out.size()) + sigma_mult * eps);
  }
  if (sigma_add != 0.0) {
    out += sigma_add * stream.next_vector(out.size());
  }
  if (!additive.empty()) {
    const size_t idx = static_cast<size_t>(next_index);
    if (idx < additive.size() && additive[idx].size() == out.size()) {
      out += additive[idx];
    }
  }
  return out;
}

}  // namespace ddp
