#include "ddp/systems/cartpole.hpp"

#include "ddp/oracle.hpp"

namespace ddp::bench {
namespace {

constexpr double kGravity = 10.0;
constexpr double kThetaU = 0.1;

// theta layout: [m_c, m_p, l, theta_x(4)] (+ [x_ub, f_ub] when constrained).
struct CartpoleModel {
  double dt = 0.05;
  bool constrained = true;
  std::vector<double> x_target = {0.0, 0.0, M_PI, 0.0};

  int n_x() const { return 4; }
  int n_u() const { return 1; }
  int n_theta() const { return constrained ? 9 : 7; }
  int n_in() const { return constrained ? 4 : 0; }
  int n_eq() const { return 0; }

  template <class T>
  T stage_cost(const std::vector<T>& x, const std::vector<T>& u, int,
               const std::vector<T>& th) const {
    T c = kThetaU * u[0] * u[0];
    for (int i = 0; i < 4; ++i) {
      const T e = x[i] - x_target[i];
      c += th[3 + i] * e * e;
    }
    return c;
  }
  template <class T>
  T terminal_cost(const std::vector<T>& x, const std::vector<T>& th) const {
    T c = (x[0] - x_target[0]) * (x[0] - x_target[0]) * th[3];
    for (int i = 1; i < 4; ++i) {
      const T e = x[i] - x_target[i];
      c += th[3 + i] * e * e;
    }
    return c;
  }
  template <class T>
  std::vector<T> dynamics(const std::vector<T>& x, const std::vector<T>& u, int,
                          const std::vector<T>& th) const {
    using std::cos;
    using std::sin;
    const T& m_c = th[0];
    const T& m_p = th[1];
    const T& l = th[2];
    const T& f = u[0];
    const T sq_ = sin(x[2]);
    const T cq = cos(x[2]);
    const T b = m_c + m_p * sq_ * sq_;
    const T qd2 = x[3] * x[3];
    const T xdd = (f + m_p * sq_ * (l * qd2 + kGravity * cq)) / b;
    const T qdd =
        (-1.0 * (f * cq) - m_p * l * qd2 * cq * sq_ - (m_c + m_p) * kGravity * sq_) / (l * b);
    return {x[0] + dt * x[1], x[1] + dt * xdd, x[2] + dt * x[3], x[3] + dt * qdd};
  }
  template <class T>
  std::vector<T> ineq(const std::vector<T>& x, const std::vector<T>& u, int,
                      const std::vector<T>& th) const {
    if (!constrained) return {};
    const T& x_ub = th[7];
    const T& f_ub = th[8];
    return {x[0] - x_ub, -1.0 * x[0] - x_ub, u[0] - f_ub, -1.0 * u[0] - f_ub};
  }
  template <class T>
  std::vector<T> eq(const std::vector<T>&, const std::vector<T>&, int,
                    const std::vector<T>&) const {
    return {};
  }
};

}  // namespace

Cartpole make_cartpole(bool constrained, int horizon, double dt) {
  CartpoleModel model;
  model.dt = dt;
  model.constrained = constrained;

  Cartpole out;
  out.problem = make_problem(model, horizon);
  out.spec.name = "cartpole";
  out.spec.n_x = 4;
  out.spec.n_u = 1;
  out.spec.n_theta = model.n_theta();
  out.spec.n_in = model.n_in();
  out.spec.N = horizon;
  out.spec.dt = dt;
  out.spec.x0 = (Vector(4) << 0.0, 0.0, M_PI - 0.6, 0.0).finished();
  Vector theta(model.n_theta());
  theta.head(7) << 1.0, 0.2, 0.5, 1.0, 0.5, 2.0, 0.5;
  if (constrained) theta.tail(2) << 0.6, 4.0;  // x_ub, f_ub (force bound binds)
  out.spec.theta_star = theta;
  out.spec.theta_lo = Vector::Constant(model.n_theta(), 1e-2);
  out.spec.theta_hi = Vector::Constant(model.n_theta(), 50.0);
  out.spec.constrained = constrained;
  out.spec.theta_labels = {"m_c", "m_p", "l", "w_pos", "w_vel", "w_angle", "w_angvel"};
  if (constrained) {
    out.spec.theta_labels.push_back("x_ub");
    out.spec.theta_labels.push_back("f_ub");
  }
  return out;
}

}  // namespace ddp::bench
