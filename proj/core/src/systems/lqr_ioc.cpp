#include "ddp/systems/lqr_ioc.hpp"

#include "ddp/oracle.hpp"

namespace ddp::bench {
namespace {

struct LqrIocModel {
  bool with_constraint = true;
  double bound = 0.1;

  int n_x() const { return 2; }
  int n_u() const { return 1; }
  int n_theta() const { return 3; }
  int n_in() const { return with_constraint ? 2 : 0; }
  int n_eq() const { return 0; }

  template <class T>
  T stage_cost(const std::vector<T>& x, const std::vector<T>& u, int,
               const std::vector<T>& th) const {
    return th[0] * x[0] * x[0] + th[1] * x[1] * x[1] + th[2] * u[0] * u[0];
  }
  template <class T>
  T terminal_cost(const std::vector<T>&, const std::vector<T>&) const {
    return T(0.0);
  }
  template <class T>
  std::vector<T> dynamics(const std::vector<T>& x, const std::vector<T>& u, int,
                          const std::vector<T>&) const {
    return {-1.0 * x[0] + x[1] + u[0], x[1] + 3.0 * u[0]};
  }
  template <class T>
  std::vector<T> ineq(const std::vector<T>& x, const std::vector<T>& u, int,
                      const std::vector<T>&) const {
    if (!with_constraint) return {};
    // |x_1 u| <= bound as two smooth rows.
    return {x[0] * u[0] - bound, -1.0 * (x[0] * u[0]) - bound};
  }
  template <class T>
  std::vector<T> eq(const std::vector<T>&, const std::vector<T>&, int,
                    const std::vector<T>&) const {
    return {};
  }
};

}  // namespace

LqrIoc make_lqr_ioc(bool constrained, int horizon) {
  LqrIoc out;
  LqrIocModel model;
  model.with_constraint = constrained;
  out.problem = make_problem(model, horizon);

  out.problem.features = FeatureOracle{
      [](const Vector& x, const Vector& u, int) {
        Vector phi(3);
        phi << x[0] * x[0], x[1] * x[1], u[0] * u[0];
        return phi;
      },
      [](const Vector& x, const Vector&, int) {
        Matrix px = Matrix::Zero(3, 2);
        px(0, 0) = 2.0 * x[0];
        px(1, 1) = 2.0 * x[1];
        return px;
      },
      [](const Vector&, const Vector& u, int) {
        Matrix pu = Matrix::Zero(3, 1);
        pu(2, 0) = 2.0 * u[0];
        return pu;
      }};

  out.A = (Matrix(2, 2) << -1.0, 1.0, 0.0, 1.0).finished();
  out.B = (Matrix(2, 1) << 1.0, 3.0).finished();

  out.spec.name = "lqr_ioc";
  out.spec.n_x = 2;
  out.spec.n_u = 1;
  out.spec.n_theta = 3;
  out.spec.n_in = model.n_in();
  out.spec.N = horizon;
  out.spec.dt = 1.0;
  out.spec.x0 = (Vector(2) << 2.0, 1.0).finished();
  out.spec.theta_star = (Vector(3) << 0.1, 0.3, 0.6).finished();
  out.spec.theta_lo = Vector::Constant(3, 1e-3);
  out.spec.theta_hi = Vector::Constant(3, 10.0);
  out.spec.constrained = constrained;
  out.spec.theta_labels = {"theta_x1", "theta_x2", "theta_u"};
  out.spec.linear_quadratic = true;
  return out;
}

}  // namespace ddp::bench
