#include "ddp/ipddp.hpp"

#include <Eigen/Cholesky>

namespace ddp {
namespace {

std::vector<StageDerivatives> stage_derivatives(const OCProblem& p, const Trajectory& t,
                                                const Vector& theta) {
  std::vector<StageDerivatives> d(p.N);
  for (int k = 0; k < p.N; ++k) {
    d[k] = p.stage_derivs(t.states[k], t.controls[k], k, theta, DerivScope::kStateControl);
  }
  return d;
}

double merit_from_derivs(const OCProblem& p, const Trajectory& t, const Vector& theta,
                         const std::vector<StageDerivatives>& d, double mu) {
  Vector costate = p.terminal_derivs(t.states[p.N], theta, DerivScope::kStateControl).cx;
  double acc = 0.0;
  for (int k = p.N - 1; k >= 0; --k) {
    Vector qu = d[k].cu + d[k].fu.transpose() * costate;
    Vector px = d[k].cx + d[k].fx.transpose() * costate;
    if (p.n_in > 0) {
      qu += d[k].gu.transpose() * t.duals_in[k];
      px += d[k].gx.transpose() * t.duals_in[k];
      const Vector r_in = t.duals_in[k].cwiseProduct(d[k].g).array() + mu;
      acc += r_in.squaredNorm();
    }
    if (p.n_eq > 0) {
      qu += d[k].hu.transpose() * t.duals_eq[k];
      px += d[k].hx.transpose() * t.duals_eq[k];
      const Vector r_eq = t.duals_eq[k] - d[k].h / mu;
      acc += r_eq.squaredNorm();
    }
    acc += qu.squaredNorm();
    costate = px;
  }
  return std::sqrt(acc);
}

BackwardPassResult backward_from_derivs(const OCProblem& p, const Trajectory& t,
                                        const Vector& theta,
                                        const std::vector<StageDerivatives>& d, double mu,
                                        double reg, const IpddpConfig& cfg) {
  const int N = p.N;
  BackwardPassResult out;
  out.value.V_x.resize(N + 1);
  out.value.V_xx.resize(N + 1);
  out.gains.k.resize(N);
  out.gains.K.resize(N);
  out.gains.k_in.resize(N);
  out.gains.K_in.resize(N);
  out.gains.k_eq.resize(N);
  out.gains.K_eq.resize(N);

  const TerminalDerivatives term =
      p.terminal_derivs(t.states[N], theta, DerivScope::kStateControl);

  while (true) {
    bool ok = true;
    int failed_stage = -1;
    out.value.V_x[N] = term.cx;
    out.value.V_xx[N] = symmetrize(term.cxx);
    for (int k = N - 1; k >= 0; --k) {
      const QBlocks q =
          q_expansion(d[k], out.value.V_x[k + 1], out.value.V_xx[k + 1], t.duals_in[k],
                      t.duals_eq[k]);
      const HatQBlocks hq = hatq(q, d[k], t.duals_in[k], t.duals_eq[k], mu, k);

      Matrix quu_reg = symmetrize(hq.Quu_hat);
      quu_reg.diagonal().array() += reg;
      Eigen::LLT<Matrix> llt(quu_reg);
      if (llt.info() != Eigen::Success) {
        ok = false;
        failed_stage = k;
        break;
      }
      const Vector kff = -llt.solve(hq.Qu_hat);
      const Matrix Kfb = -llt.solve(hq.Qux_hat);
      out.gains.k[k] = kff;
      out.gains.K[k] = Kfb;

      if (p.n_in > 0) {
        const Vector inv_g = d[k].g.cwiseInverse();
        const Vector lam = t.duals_in[k];
        const Vector kin_rhs = hq.r_in + lam.cwiseProduct(d[k].gu * kff);
        out.gains.k_in[k] = -kin_rhs.cwiseProduct(inv_g);
        const Matrix Kin_rhs = lam.asDiagonal() * Matrix(d[k].gx + d[k].gu * Kfb);
        out.gains.K_in[k] = (-inv_g).asDiagonal() * Kin_rhs;
      } else {
        out.gains.k_in[k] = Vector::Zero(0);
        out.gains.K_in[k] = Matrix::Zero(0, p.n_x);
      }
      if (p.n_eq > 0) {
        out.gains.k_eq[k] = -hq.r_eq + (d[k].hu * kff) / mu;
        out.gains.K_eq[k] = (d[k].hx + d[k].hu * Kfb) / mu;
      } else {
        out.gains.k_eq[k] = Vector::Zero(0);
        out.gains.K_eq[k] = Matrix::Zero(0, p.n_x);
      }

      // General-form value update; reduces to V = Q_hat - K^T Quu_hat {k,K}
      // when reg = 0.
      out.value.V_x[k] = hq.Qx_hat + Kfb.transpose() * (hq.Qu_hat + hq.Quu_hat * kff) +
                         hq.Qux_hat.transpose() * kff;
      out.value.V_xx[k] = symmetrize(hq.Qxx_hat + Kfb.transpose() * hq.Qux_hat +
                                     hq.Qux_hat.transpose() * Kfb +
                                     Kfb.transpose() * hq.Quu_hat * Kfb);
      if (!all_finite(out.value.V_x[k]) || !all_finite(out.value.V_xx[k])) {
        throw SolverError("backward_pass: non-finite value expansion at stage " +
                          std::to_string(k));
      }
    }
    if (ok) break;
    reg = (reg == 0.0) ? cfg.reg_min : reg * cfg.reg_scale;
    if (reg > cfg.reg_cap) {
      throw RegularizationCapExceeded(failed_stage,
                                      "backward_pass: regularization cap exceeded at stage " +
                                          std::to_string(failed_stage));
    }
  }
  out.reg_used = reg;
  return out;
}

struct InitializedState {
  Trajectory traj;
  double mu;
};

InitializedState initialize(const OCProblem& p, const Vector& theta, const Vector& x0,
                            const IpddpConfig& cfg, const Trajectory* warm_start) {
  Trajectory t;
  bool warm_duals = false;
  if (warm_start != nullptr) {
    t = rollout(p, x0, warm_start->controls, theta);
    warm_duals = static_cast<int>(warm_start->duals_in.size()) == p.N &&
                 static_cast<int>(warm_start->duals_eq.size()) == p.N;
    for (int k = 0; warm_duals && k < p.N; ++k) {
      warm_duals = warm_start->duals_in[k].size() == p.n_in &&
                   warm_start->duals_eq[k].size() == p.n_eq &&
                   (p.n_in == 0 || warm_start->duals_in[k].minCoeff() > 0.0);
    }
    if (warm_duals) {
      t.duals_in = warm_start->duals_in;
      t.duals_eq = warm_start->duals_eq;
    }
  } else {
    t = rollout(p, x0, std::vector<Vector>(p.N, Vector::Zero(p.n_u)), theta);
  }

  if (p.n_in > 0) {
    for (int k = 0; k < p.N; ++k) {
      const Vector g = p.ineq(t.states[k], t.controls[k], k, theta);
      if (g.maxCoeff() >= 0.0) {
        throw InteriorPointInfeasible(
            k, "solve_ipddp: initialization is not strictly interior (g >= 0 at stage " +
                   std::to_string(k) + ")");
      }
    }
  }

  double mu = cfg.mu_init;
  if (p.has_constraints()) {
    auto init_duals = [&](double mu_val) {
      for (int k = 0; k < p.N; ++k) {
        const Vector g = p.ineq ? p.ineq(t.states[k], t.controls[k], k, theta) : Vector();
        for (Eigen::Index i = 0; i < g.size(); ++i) {
          t.duals_in[k][i] = std::max(mu_val / (-g[i]), cfg.dual_init_floor);
        }
        t.duals_eq[k].setZero();
      }
    };
    if (!warm_duals) init_duals(mu);
    // mu starts at a fraction of the initial merit scale, within bounds.
    const double m0 = merit(p, t, theta, mu);
    mu = std::clamp(0.1 * m0, cfg.mu_floor, cfg.mu_init);
    if (!warm_duals) init_duals(mu);
  }
  return {std::move(t), mu};
}

}  // namespace

QBlocks q_expansion(const StageDerivatives& d, const Vector& Vx_next, const Matrix& Vxx_next,
                    const Vector& lam_in, const Vector& lam_eq) {
  QBlocks q;
  q.Qx = d.cx + d.fx.transpose() * Vx_next;
  q.Qu = d.cu + d.fu.transpose() * Vx_next;
  q.Qxx = d.cxx + d.fx.transpose() * Vxx_next * d.fx + contract(Vx_next, d.fxx);
  q.Qux = d.cux + d.fu.transpose() * Vxx_next * d.fx + contract(Vx_next, d.fux);
  q.Quu = d.cuu + d.fu.transpose() * Vxx_next * d.fu + contract(Vx_next, d.fuu);
  if (lam_in.size() > 0) {
    q.Qx += d.gx.transpose() * lam_in;
    q.Qu += d.gu.transpose() * lam_in;
    q.Qxx += contract(lam_in, d.gxx);
    q.Qux += contract(lam_in, d.gux);
    q.Quu += contract(lam_in, d.guu);
  }
  if (lam_eq.size() > 0) {
    q.Qx += d.hx.transpose() * lam_eq;
    q.Qu += d.hu.transpose() * lam_eq;
    q.Qxx += contract(lam_eq, d.hxx);
    q.Qux += contract(lam_eq, d.hux);
    q.Quu += contract(lam_eq, d.huu);
  }
  if (!all_finite(q.Quu) || !all_finite(q.Qu)) {
    throw SolverError("q_expansion: non-finite cost-to-go expansion");
  }
  return q;
}

HatQBlocks hatq(const QBlocks& q, const StageDerivatives& d, const Vector& lam_in,
                const Vector& lam_eq, double mu, int stage_for_error) {
  HatQBlocks hq;
  hq.Qu_hat = q.Qu;
  hq.Qx_hat = q.Qx;
  hq.Qux_hat = q.Qux;
  hq.Quu_hat = q.Quu;
  hq.Qxx_hat = q.Qxx;
  if (lam_in.size() > 0) {
    for (Eigen::Index i = 0; i < d.g.size(); ++i) {
      if (d.g[i] >= 0.0) {
        throw InteriorPointInfeasible(stage_for_error,
                                      "hatq: inequality constraint not strictly negative");
      }
    }
    hq.r_in = lam_in.cwiseProduct(d.g).array() + mu;
    const Vector inv_g = d.g.cwiseInverse();
    const Vector lam_over_g = lam_in.cwiseQuotient(d.g);
    hq.Qu_hat -= d.gu.transpose() * hq.r_in.cwiseProduct(inv_g);
    hq.Qx_hat -= d.gx.transpose() * hq.r_in.cwiseProduct(inv_g);
    hq.Qux_hat -= d.gu.transpose() * lam_over_g.asDiagonal() * d.gx;
    hq.Quu_hat -= d.gu.transpose() * lam_over_g.asDiagonal() * d.gu;
    hq.Qxx_hat -= d.gx.transpose() * lam_over_g.asDiagonal() * d.gx;
  } else {
    hq.r_in = Vector::Zero(0);
  }
  if (lam_eq.size() > 0) {
    hq.r_eq = lam_eq - d.h / mu;
    hq.Qu_hat -= d.hu.transpose() * hq.r_eq;
    hq.Qx_hat -= d.hx.transpose() * hq.r_eq;
    hq.Qux_hat += d.hu.transpose() * d.hx / mu;
    hq.Quu_hat += d.hu.transpose() * d.hu / mu;
    hq.Qxx_hat += d.hx.transpose() * d.hx / mu;
  } else {
    hq.r_eq = Vector::Zero(0);
  }
  return hq;
}

BackwardPassResult backward_pass(const OCProblem& p, const Trajectory& t, const Vector& theta,
                                 double mu, double reg, const IpddpConfig& cfg) {
  return backward_from_derivs(p, t, theta, stage_derivatives(p, t, theta), mu, reg, cfg);
}

Trajectory forward_pass(const OCProblem& p, const Trajectory& t, const GainSet& gains,
                        const Vector& theta, double alpha, double ftb_tau) {
  Trajectory out;
  out.states.resize(p.N + 1);
  out.controls.resize(p.N);
  out.duals_in.resize(p.N);
  out.duals_eq.resize(p.N);
  out.states[0] = t.states[0];
  for (int k = 0; k < p.N; ++k) {
    const Vector dx = out.states[k] - t.states[k];
    out.controls[k] = t.controls[k] + alpha * gains.k[k] + gains.K[k] * dx;
    out.duals_in[k] = t.duals_in[k];
    out.duals_eq[k] = t.duals_eq[k];
    if (p.n_in > 0) {
      out.duals_in[k] += alpha * gains.k_in[k] + gains.K_in[k] * dx;
      // Fraction-to-boundary on both the duals and the constraint values.
      for (Eigen::Index i = 0; i < out.duals_in[k].size(); ++i) {
        if (out.duals_in[k][i] < (1.0 - ftb_tau) * t.duals_in[k][i]) {
          throw ForwardPassRejected(k, "forward_pass: dual fraction-to-boundary violated");
        }
      }
      const Vector g_new = p.ineq(out.states[k], out.controls[k], k, theta);
      const Vector g_old = p.ineq(t.states[k], t.controls[k], k, theta);
      for (Eigen::Index i = 0; i < g_new.size(); ++i) {
        if (g_new[i] > (1.0 - ftb_tau) * g_old[i]) {
          throw ForwardPassRejected(k, "forward_pass: inequality fraction-to-boundary violated");
        }
      }
    }
    if (p.n_eq > 0) {
      out.duals_eq[k] += alpha * gains.k_eq[k] + gains.K_eq[k] * dx;
    }
    if (!all_finite(out.controls[k])) {
      throw ForwardPassRejected(k, "forward_pass: non-finite control");
    }
    out.states[k + 1] = p.dynamics(out.states[k], out.controls[k], k, theta);
    if (!all_finite(out.states[k + 1])) {
      throw ForwardPassRejected(k, "forward_pass: non-finite rollout");
    }
  }
  return out;
}

double merit(const OCProblem& p, const Trajectory& t, const Vector& theta, double mu) {
  return merit_from_derivs(p, t, theta, stage_derivatives(p, t, theta), mu);
}

SolveResult solve_ipddp(const OCProblem& p, const Vector& theta, const Vector& x0,
                        const IpddpConfig& cfg, const Trajectory* warm_start) {
  InitializedState init = initialize(p, theta, x0, cfg, warm_start);
  Trajectory t = std::move(init.traj);
  double mu = p.has_constraints() ? init.mu : cfg.mu_init;
  double reg = cfg.reg_init;

  SolveResult result;
  const bool constrained = p.has_constraints();

  auto derivs = stage_derivatives(p, t, theta);
  double cur_merit = merit_from_derivs(p, t, theta, derivs, mu);

  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    // Drive mu down its schedule before attempting further steps so the line
    // search always has a meaningful target at the current perturbation.
    while (constrained && mu > cfg.mu_floor && cur_merit < cfg.kappa * mu) {
      mu = std::max(mu * cfg.mu_shrink, cfg.mu_floor);
      cur_merit = merit_from_derivs(p, t, theta, derivs, mu);
    }
    const bool at_floor = !constrained || mu <= cfg.mu_floor * (1.0 + 1e-12);
    if (cur_merit < cfg.tol && at_floor) {
      BackwardPassResult bp = backward_from_derivs(p, t, theta, derivs, mu, 0.0, cfg);
      result.traj = std::move(t);
      result.value = std::move(bp.value);
      result.gains = std::move(bp.gains);
      result.mu_final = mu;
      result.merit_final = cur_merit;
      result.iterations = iter;
      return result;
    }

    BackwardPassResult bp = backward_from_derivs(p, t, theta, derivs, mu, reg, cfg);
    reg = bp.reg_used;

    bool accepted = false;
    double alpha = 1.0;
    for (int ls = 0; ls <= cfg.ls_max_steps; ++ls) {
      Trajectory cand;
      try {
        cand = forward_pass(p, t, bp.gains, theta, alpha, cfg.ftb_tau);
      } catch (const ForwardPassRejected&) {
        alpha *= cfg.ls_backtrack;
        continue;
      }
      auto cand_derivs = stage_derivatives(p, cand, theta);
      const double cand_merit = merit_from_derivs(p, cand, theta, cand_derivs, mu);
      if (cand_merit < cur_merit) {
        t = std::move(cand);
        derivs = std::move(cand_derivs);
        cur_merit = cand_merit;
        accepted = true;
        break;
      }
      alpha *= cfg.ls_backtrack;
    }

    if (!accepted) {
      const double next_reg = (reg == 0.0) ? cfg.reg_min : reg * cfg.reg_scale;
      if (next_reg > cfg.reg_cap) {
        throw LineSearchFailed("solve_ipddp: line search failed with regularization at cap");
      }
      reg = next_reg;
      continue;
    }

    reg = (reg <= cfg.reg_min) ? 0.0 : reg / cfg.reg_scale;
    if (cfg.record_log) {
      result.log.push_back({iter, mu, cur_merit, evaluate_cost(p, t, theta), alpha, bp.reg_used});
    }
  }
  throw MaxIterationsExceeded("solve_ipddp: max iterations exceeded (merit " +
                              std::to_string(cur_merit) + ")");
}

SolveResult solve_unconstrained(const OCProblem& p, const Vector& theta, const Vector& x0,
                                const IpddpConfig& cfg, const Trajectory* warm_start) {
  if (p.has_constraints()) {
    throw std::invalid_argument("solve_unconstrained: problem has constraints");
  }
  return solve_ipddp(p, theta, x0, cfg, warm_start);
}

}  // namespace ddp
