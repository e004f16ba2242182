#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "ddp/linalg.hpp"

namespace ddp {

/// Which derivative blocks an oracle call must fill.
enum class DerivScope {
  kStateControl,  // x/u blocks only (enough for the trajectory solver)
  kFull,          // x/u/theta blocks (needed by the gradient solvers)
};

/// First and second partials of the stage functions at one (x, u, k, theta).
/// Tensor slice [f_ab][i] is the (a,b)-Hessian of the i-th output component.
struct StageDerivatives {
  Vector cx, cu, ctheta;
  Matrix cxx, cux, cuu, cxtheta, cutheta, cthetatheta;

  Matrix fx, fu, ftheta;
  Tensor3 fxx, fux, fuu, fxtheta, futheta, fthetatheta;

  Vector g;  // constraint values are produced alongside their derivatives
  Matrix gx, gu, gtheta;
  Tensor3 gxx, gux, guu, gxtheta, gutheta, gthetatheta;

  Vector h;
  Matrix hx, hu, htheta;
  Tensor3 hxx, hux, huu, hxtheta, hutheta, hthetatheta;
};

struct TerminalDerivatives {
  Vector cx, ctheta;
  Matrix cxx, cxtheta, cthetatheta;
};

/// State/control sequences plus the dual sequences carried by the
/// interior-point solver. duals_in stays strictly positive during iteration.
struct Trajectory {
  std::vector<Vector> states;    // N+1
  std::vector<Vector> controls;  // N
  std::vector<Vector> duals_in;  // N (lambda for g <= 0)
  std::vector<Vector> duals_eq;  // N (lambda for h = 0)

  int horizon() const { return static_cast<int>(controls.size()); }
};

/// Feature oracle for stage costs of the form c = theta^T phi(x, u)
/// (used by the linear constrained-IOC path).
struct FeatureOracle {
  std::function<Vector(const Vector&, const Vector&, int)> phi;    // n_theta
  std::function<Matrix(const Vector&, const Vector&, int)> phi_x;  // n_theta x n_x
  std::function<Matrix(const Vector&, const Vector&, int)> phi_u;  // n_theta x n_u
};

/// Parameterized horizon-N optimal control problem
///   min sum_k c(x_k, u_k, k; theta) + c_f(x_N; theta)
///   s.t. x_{k+1} = f(x_k, u_k, k; theta),  g <= 0,  h = 0.
/// Immutable after construction; all members are pure callables.
struct OCProblem {
  int n_x = 0, n_u = 0, n_theta = 0, n_in = 0, n_eq = 0, N = 0;

  std::function<double(const Vector&, const Vector&, int, const Vector&)> stage_cost;
  std::function<double(const Vector&, const Vector&)> terminal_cost;
  std::function<Vector(const Vector&, const Vector&, int, const Vector&)> dynamics;
  std::function<Vector(const Vector&, const Vector&, int, const Vector&)> ineq;  // null if n_in == 0
  std::function<Vector(const Vector&, const Vector&, int, const Vector&)> eq;    // null if n_eq == 0

  std::function<StageDerivatives(const Vector&, const Vector&, int, const Vector&, DerivScope)>
      stage_derivs;
  std::function<TerminalDerivatives(const Vector&, const Vector&, DerivScope)> terminal_derivs;

  std::optional<FeatureOracle> features;  // set when the stage cost is linear in theta

  bool has_constraints() const { return n_in > 0 || n_eq > 0; }
};

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivergedRolloutError : std::runtime_error {
  explicit DivergedRolloutError(int k, const std::string& what)
      : std::runtime_error(what), stage(k) {}
  int stage = 0;
};

/// J(T; theta) = sum_k c(x_k, u_k, k) + c_f(x_N).
double evaluate_cost(const OCProblem& p, const Trajectory& t, const Vector& theta);

/// Rolls controls through the dynamics from x0. Duals are zero-initialized;
/// the solvers set their own initialization policy.
Trajectory rollout(const OCProblem& p, const Vector& x0, const std::vector<Vector>& controls,
                   const Vector& theta);

/// Analytic partials from the problem's oracle. For the terminal stage use
/// OCProblem::terminal_derivs directly.
StageDerivatives derivatives_at(const OCProblem& p, int k, const Vector& x, const Vector& u,
                                const Vector& theta, DerivScope scope = DerivScope::kFull);

}  // namespace ddp
