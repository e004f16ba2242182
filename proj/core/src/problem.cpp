#include "ddp/problem.hpp"

namespace ddp {

double evaluate_cost(const OCProblem& p, const Trajectory& t, const Vector& theta) {
  if (static_cast<int>(t.states.size()) != p.N + 1 ||
      static_cast<int>(t.controls.size()) != p.N) {
    throw DimensionError("evaluate_cost: trajectory does not match problem horizon");
  }
  double total = 0.0;
  for (int k = 0; k < p.N; ++k) {
    if (t.states[k].size() != p.n_x || t.controls[k].size() != p.n_u) {
      throw DimensionError("evaluate_cost: state/control dimension mismatch at stage " +
                           std::to_string(k));
    }
    total += p.stage_cost(t.states[k], t.controls[k], k, theta);
  }
  total += p.terminal_cost(t.states[p.N], theta);
  return total;
}

Trajectory rollout(const OCProblem& p, const Vector& x0, const std::vector<Vector>& controls,
                   const Vector& theta) {
  if (static_cast<int>(controls.size()) != p.N) {
    throw DimensionError("rollout: expected " + std::to_string(p.N) + " controls");
  }
  Trajectory t;
  t.states.resize(p.N + 1);
  t.controls = controls;
  t.duals_in.assign(p.N, Vector::Zero(p.n_in));
  t.duals_eq.assign(p.N, Vector::Zero(p.n_eq));
  t.states[0] = x0;
  for (int k = 0; k < p.N; ++k) {
    t.states[k + 1] = p.dynamics(t.states[k], controls[k], k, theta);
    if (!all_finite(t.states[k + 1])) {
      throw DivergedRolloutError(k, "rollout: non-finite state at stage " + std::to_string(k + 1));
    }
  }
  return t;
}

StageDerivatives derivatives_at(const OCProblem& p, int k, const Vector& x, const Vector& u,
                                const Vector& theta, DerivScope scope) {
  if (!p.stage_derivs) throw std::runtime_error("derivatives_at: problem has no derivative oracle");
  return p.stage_derivs(x, u, k, theta, scope);
}

}  // namespace ddp
