#pragma once

#include "ddp/problem.hpp"

namespace ddp {

/// Central-difference approximation of every block in StageDerivatives,
/// built purely from the problem's value callables. Verification-grade:
/// used to audit analytic oracles, never inside a solver.
StageDerivatives fd_derivatives_at(const OCProblem& p, int k, const Vector& x, const Vector& u,
                                   const Vector& theta, double h = 1e-4);

TerminalDerivatives fd_terminal_derivatives_at(const OCProblem& p, const Vector& x,
                                               const Vector& theta, double h = 1e-4);

}  // namespace ddp
