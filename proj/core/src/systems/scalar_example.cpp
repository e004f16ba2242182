#include "ddp/systems/scalar_example.hpp"

#include "ddp/oracle.hpp"

namespace ddp::bench {
namespace {

struct ScalarModel {
  int n_x() const { return 1; }
  int n_u() const { return 1; }
  int n_theta() const { return 1; }
  int n_in() const { return 0; }
  int n_eq() const { return 0; }

  template <class T>
  T stage_cost(const std::vector<T>& x, const std::vector<T>& u, int,
               const std::vector<T>& th) const {
    return 0.5 * (th[0] * x[0] * x[0] + u[0] * u[0]);
  }
  template <class T>
  T terminal_cost(const std::vector<T>& x, const std::vector<T>&) const {
    return 0.5 * x[0] * x[0];
  }
  template <class T>
  std::vector<T> dynamics(const std::vector<T>& x, const std::vector<T>& u, int,
                          const std::vector<T>&) const {
    return {x[0] + u[0]};
  }
  template <class T>
  std::vector<T> ineq(const std::vector<T>&, const std::vector<T>&, int,
                      const std::vector<T>&) const {
    return {};
  }
  template <class T>
  std::vector<T> eq(const std::vector<T>&, const std::vector<T>&, int,
                    const std::vector<T>&) const {
    return {};
  }
};

}  // namespace

ScalarExample make_scalar_example() {
  ScalarExample out;
  out.problem = make_problem(ScalarModel{}, 2);
  out.spec.name = "scalar_example";
  out.spec.n_x = 1;
  out.spec.n_u = 1;
  out.spec.n_theta = 1;
  out.spec.N = 2;
  out.spec.dt = 1.0;
  out.spec.x0 = Vector::Constant(1, 1.0);
  out.spec.theta_star = Vector::Constant(1, 1.0);
  out.spec.theta_lo = Vector::Constant(1, 1e-3);
  out.spec.theta_hi = Vector::Constant(1, 100.0);
  out.spec.theta_labels = {"theta"};
  return out;
}

double scalar_gain0(double theta) { return -(2.0 * theta + 1.0) / (2.0 * theta + 3.0); }

}  // namespace ddp::bench
