#pragma once

#include "ddp/problem.hpp"

namespace ddp {

/// Per-stage quadratic expansion of the optimal cost-to-go, k = 0..N.
struct ValueExpansion {
  std::vector<Vector> V_x;   // N+1
  std::vector<Matrix> V_xx;  // N+1, symmetric
};

/// Affine feedback gains of one backward pass, k = 0..N-1.
/// du = k + K dx, dlam_in = k_in + K_in dx, dlam_eq = k_eq + K_eq dx.
struct GainSet {
  std::vector<Vector> k, k_in, k_eq;
  std::vector<Matrix> K, K_in, K_eq;
};

struct IpddpConfig {
  double mu_init = 0.1;
  double mu_shrink = 0.2;      // multiplicative factor when merit < kappa*mu
  double mu_floor = 1e-8;
  double kappa = 0.2;          // shrink trigger
  double tol = 1e-10;          // merit tolerance at the final mu
  int max_iters = 500;
  double reg_init = 0.0;       // Quu regularization schedule
  double reg_min = 1e-6;
  double reg_scale = 10.0;
  double reg_cap = 1e6;
  double ftb_tau = 0.995;      // fraction-to-boundary parameter
  double ls_backtrack = 0.5;
  int ls_max_steps = 10;       // alpha down to 2^-10
  double dual_init_floor = 1e-3;
  bool record_log = true;
};

struct IterationRecord {
  int iteration = 0;
  double mu = 0.0;
  double merit = 0.0;
  double cost = 0.0;
  double alpha = 0.0;
  double reg = 0.0;
};

struct SolveResult {
  Trajectory traj;
  ValueExpansion value;
  GainSet gains;
  double mu_final = 0.0;
  double merit_final = 0.0;
  int iterations = 0;
  std::vector<IterationRecord> log;
};

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InteriorPointInfeasible : SolverError {
  InteriorPointInfeasible(int k, const std::string& what) : SolverError(what), stage(k) {}
  int stage = 0;
};
struct RegularizationCapExceeded : SolverError {
  RegularizationCapExceeded(int k, const std::string& what) : SolverError(what), stage(k) {}
  int stage = 0;
};
struct LineSearchFailed : SolverError {
  using SolverError::SolverError;
};
struct MaxIterationsExceeded : SolverError {
  using SolverError::SolverError;
};
struct ForwardPassRejected : SolverError {
  ForwardPassRejected(int k, const std::string& what) : SolverError(what), stage(k) {}
  int stage = 0;
};

/// Cost-to-go expansion blocks at one stage.
struct QBlocks {
  Vector Qx, Qu;
  Matrix Qxx, Qux, Quu;
};

/// Q-hat blocks after eliminating the dual directions, plus the perturbed
/// residuals r_in = diag(lam_in) g + mu 1 and r_eq = lam_eq - h / mu.
struct HatQBlocks {
  Vector Qu_hat, Qx_hat;
  Matrix Qux_hat, Quu_hat, Qxx_hat;
  Vector r_in, r_eq;
};

/// Expansion of Q = c + V^+(f) + lam_in^T g + lam_eq^T h around one stage.
QBlocks q_expansion(const StageDerivatives& d, const Vector& Vx_next, const Matrix& Vxx_next,
                    const Vector& lam_in, const Vector& lam_eq);

/// Requires g < 0 strictly (throws InteriorPointInfeasible otherwise).
HatQBlocks hatq(const QBlocks& q, const StageDerivatives& d, const Vector& lam_in,
                const Vector& lam_eq, double mu, int stage_for_error = -1);

struct BackwardPassResult {
  GainSet gains;
  ValueExpansion value;
  double reg_used = 0.0;
};

/// One backward sweep at perturbation mu. Escalates the Quu regularization
/// from `reg` until every stage factorizes positive definite; throws
/// RegularizationCapExceeded (with the stage) past cfg.reg_cap.
BackwardPassResult backward_pass(const OCProblem& p, const Trajectory& t, const Vector& theta,
                                 double mu, double reg, const IpddpConfig& cfg = {});

/// Forward roll of the affine policy with step alpha on the feedforward
/// terms. Throws ForwardPassRejected when the fraction-to-boundary rule
/// (on g < 0 and lam_in > 0) fails or the rollout leaves finite range.
Trajectory forward_pass(const OCProblem& p, const Trajectory& t, const GainSet& gains,
                        const Vector& theta, double alpha, double ftb_tau);

/// Norm of the stacked stationarity + perturbed complementarity + perturbed
/// equality residuals (costate recursion form; zero at the perturbed optimum).
double merit(const OCProblem& p, const Trajectory& t, const Vector& theta, double mu);

/// Interior-point DDP solve of the constrained problem. Returns the final
/// backward artifacts for reuse by the gradient/IRL layers.
SolveResult solve_ipddp(const OCProblem& p, const Vector& theta, const Vector& x0,
                        const IpddpConfig& cfg = {},
                        const Trajectory* warm_start = nullptr);

/// Classic DDP special case (requires n_in == n_eq == 0).
SolveResult solve_unconstrained(const OCProblem& p, const Vector& theta, const Vector& x0,
                                const IpddpConfig& cfg = {},
                                const Trajectory* warm_start = nullptr);

}  // namespace ddp
