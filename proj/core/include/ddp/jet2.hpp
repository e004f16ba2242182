#pragma once

#include <cmath>
#include <vector>

#include "ddp/linalg.hpp"

namespace ddp {

/// Scalar carrying its value, gradient and Hessian w.r.t. a fixed set of
/// input variables. Benchmark oracles evaluate their physics on Jet2 inputs
/// to obtain exact first and second derivatives in one pass. An empty
/// gradient/Hessian means "identically zero" (constants stay cheap).
class Jet2 {
 public:
  Jet2() : v_(0.0) {}
  Jet2(double value) : v_(value) {}  // NOLINT: implicit on purpose

  static Jet2 variable(double value, Eigen::Index dim, Eigen::Index index) {
    Jet2 j(value);
    j.g_ = Vector::Zero(dim);
    j.g_[index] = 1.0;
    return j;
  }

  double value() const { return v_; }
  const Vector& grad_raw() const { return g_; }

  Vector grad(Eigen::Index dim) const { return g_.size() ? g_ : Vector::Zero(dim); }
  Matrix hess(Eigen::Index dim) const { return h_.size() ? h_ : Matrix::Zero(dim, dim); }

  Jet2 operator-() const {
    Jet2 out(-v_);
    if (g_.size()) out.g_ = -g_;
    if (h_.size()) out.h_ = -h_;
    return out;
  }

  friend Jet2 operator+(const Jet2& a, const Jet2& b) {
    Jet2 out(a.v_ + b.v_);
    out.g_ = add(a.g_, b.g_);
    out.h_ = add(a.h_, b.h_);
    return out;
  }
  friend Jet2 operator-(const Jet2& a, const Jet2& b) {
    Jet2 out(a.v_ - b.v_);
    out.g_ = sub(a.g_, b.g_);
    out.h_ = sub(a.h_, b.h_);
    return out;
  }
  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 out(a.v_ * b.v_);
    out.g_ = add(scaled(a.g_, b.v_), scaled(b.g_, a.v_));
    Matrix h = add(scaled(a.h_, b.v_), scaled(b.h_, a.v_));
    if (a.g_.size() && b.g_.size()) {
      Matrix cross = a.g_ * b.g_.transpose();
      cross += cross.transpose().eval();
      h = add(h, cross);
    }
    out.h_ = std::move(h);
    return out;
  }
  friend Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inverse(b); }

  friend Jet2 operator+(const Jet2& a, double c) { Jet2 out = a; out.v_ += c; return out; }
  friend Jet2 operator+(double c, const Jet2& a) { return a + c; }
  friend Jet2 operator-(const Jet2& a, double c) { return a + (-c); }
  friend Jet2 operator-(double c, const Jet2& a) { return (-a) + c; }
  friend Jet2 operator*(const Jet2& a, double c) {
    Jet2 out(a.v_ * c);
    out.g_ = scaled(a.g_, c);
    out.h_ = scaled(a.h_, c);
    return out;
  }
  friend Jet2 operator*(double c, const Jet2& a) { return a * c; }
  friend Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }
  friend Jet2 operator/(double c, const Jet2& a) { return inverse(a) * c; }

  Jet2& operator+=(const Jet2& o) { *this = *this + o; return *this; }
  Jet2& operator-=(const Jet2& o) { *this = *this - o; return *this; }
  Jet2& operator*=(const Jet2& o) { *this = *this * o; return *this; }

  /// Composition with a scalar map: f(a), given f(a.v), f'(a.v), f''(a.v).
  static Jet2 compose(const Jet2& a, double f, double df, double ddf) {
    Jet2 out(f);
    out.g_ = scaled(a.g_, df);
    Matrix h = scaled(a.h_, df);
    if (a.g_.size() && ddf != 0.0) h = add(h, Matrix(ddf * (a.g_ * a.g_.transpose())));
    out.h_ = std::move(h);
    return out;
  }

  static Jet2 inverse(const Jet2& a) {
    const double inv = 1.0 / a.v_;
    return compose(a, inv, -inv * inv, 2.0 * inv * inv * inv);
  }

 private:
  static Vector scaled(const Vector& a, double c) {
    if (!a.size() || c == 0.0) return Vector();
    return a * c;
  }
  static Matrix scaled(const Matrix& a, double c) {
    if (!a.size() || c == 0.0) return Matrix();
    return a * c;
  }
  static Vector add(const Vector& a, const Vector& b) {
    if (!a.size()) return b;
    if (!b.size()) return a;
    return a + b;
  }
  static Matrix add(const Matrix& a, const Matrix& b) {
    if (!a.size()) return b;
    if (!b.size()) return a;
    return a + b;
  }
  static Vector sub(const Vector& a, const Vector& b) {
    if (!b.size()) return a;
    if (!a.size()) return -b;
    return a - b;
  }
  static Matrix sub(const Matrix& a, const Matrix& b) {
    if (!b.size()) return a;
    if (!a.size()) return -b;
    return a - b;
  }

  double v_;
  Vector g_;  // empty = zero
  Matrix h_;  // empty = zero
};

inline Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return Jet2::compose(a, s, c, -s);
}
inline Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return Jet2::compose(a, c, -s, -c);
}
inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value());
  return Jet2::compose(a, e, e, e);
}
inline Jet2 log(const Jet2& a) {
  const double inv = 1.0 / a.value();
  return Jet2::compose(a, std::log(a.value()), inv, -inv * inv);
}
inline Jet2 sqrt(const Jet2& a) {
  const double r = std::sqrt(a.value());
  return Jet2::compose(a, r, 0.5 / r, -0.25 / (r * r * r));
}
inline Jet2 sq(const Jet2& a) { return a * a; }
inline double sq(double a) { return a * a; }

/// Vector of Jet2 scalars seeded as the variables [offset, offset+n) of a
/// dim-dimensional input.
inline std::vector<Jet2> seed_variables(const Vector& values, Eigen::Index dim, Eigen::Index offset) {
  std::vector<Jet2> out;
  out.reserve(static_cast<size_t>(values.size()));
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    out.push_back(Jet2::variable(values[i], dim, offset + i));
  }
  return out;
}

}  // namespace ddp
