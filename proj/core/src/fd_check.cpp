#include "ddp/fd_check.hpp"

namespace ddp {
namespace {

// Steps are scaled by the magnitude of the perturbed component.
double step_for(const Vector& z, Eigen::Index i, double h) { return h * (1.0 + std::abs(z[i])); }

Vector fd_grad(const std::function<double(const Vector&)>& f, const Vector& z, double h) {
  Vector g(z.size());
  Vector zp = z;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double hi = step_for(z, i, h);
    zp[i] = z[i] + hi;
    const double fp = f(zp);
    zp[i] = z[i] - hi;
    const double fm = f(zp);
    zp[i] = z[i];
    g[i] = (fp - fm) / (2.0 * hi);
  }
  return g;
}

Matrix fd_hess(const std::function<double(const Vector&)>& f, const Vector& z, double h) {
  const Eigen::Index n = z.size();
  Matrix out(n, n);
  Vector zp = z;
  const double f0 = f(z);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double hi = step_for(z, i, h);
    for (Eigen::Index j = i; j < n; ++j) {
      const double hj = step_for(z, j, h);
      double v;
      if (i == j) {
        zp[i] = z[i] + hi;
        const double fp = f(zp);
        zp[i] = z[i] - hi;
        const double fm = f(zp);
        zp[i] = z[i];
        v = (fp - 2.0 * f0 + fm) / (hi * hi);
      } else {
        zp[i] = z[i] + hi; zp[j] = z[j] + hj;
        const double fpp = f(zp);
        zp[j] = z[j] - hj;
        const double fpm = f(zp);
        zp[i] = z[i] - hi; zp[j] = z[j] + hj;
        const double fmp = f(zp);
        zp[j] = z[j] - hj;
        const double fmm = f(zp);
        zp[i] = z[i]; zp[j] = z[j];
        v = (fpp - fpm - fmp + fmm) / (4.0 * hi * hj);
      }
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

Matrix fd_jac(const std::function<Vector(const Vector&)>& f, const Vector& z, Eigen::Index m,
              double h) {
  Matrix jac(m, z.size());
  Vector zp = z;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    const double hi = step_for(z, i, h);
    zp[i] = z[i] + hi;
    const Vector fp = f(zp);
    zp[i] = z[i] - hi;
    const Vector fm = f(zp);
    zp[i] = z[i];
    jac.col(i) = (fp - fm) / (2.0 * hi);
  }
  return jac;
}

struct VecBlocks {
  Matrix jx, ju, jtheta;
  Tensor3 txx, tux, tuu, txtheta, tutheta, tthetatheta;
};

VecBlocks fd_vector_fn(const std::function<Vector(const Vector&, const Vector&, const Vector&)>& f,
                       const Vector& x, const Vector& u, const Vector& theta, Eigen::Index m,
                       double h) {
  const Eigen::Index nx = x.size(), nu = u.size(), nth = theta.size();
  Vector z(nx + nu + nth);
  z << x, u, theta;
  auto fz = [&](const Vector& zz) {
    return f(zz.head(nx), zz.segment(nx, nu), zz.tail(nth));
  };
  const Matrix jac = fd_jac(fz, z, m, h);
  VecBlocks out;
  out.jx = jac.leftCols(nx);
  out.ju = jac.middleCols(nx, nu);
  out.jtheta = jac.rightCols(nth);
  out.txx = Tensor3(m, nx, nx);
  out.tux = Tensor3(m, nu, nx);
  out.tuu = Tensor3(m, nu, nu);
  out.txtheta = Tensor3(m, nx, nth);
  out.tutheta = Tensor3(m, nu, nth);
  out.tthetatheta = Tensor3(m, nth, nth);
  for (Eigen::Index i = 0; i < m; ++i) {
    auto fi = [&](const Vector& zz) { return fz(zz)[i]; };
    const Matrix hess = fd_hess(fi, z, h);
    out.txx[i] = hess.block(0, 0, nx, nx);
    out.tux[i] = hess.block(nx, 0, nu, nx);
    out.tuu[i] = hess.block(nx, nx, nu, nu);
    out.txtheta[i] = hess.block(0, nx + nu, nx, nth);
    out.tutheta[i] = hess.block(nx, nx + nu, nu, nth);
    out.tthetatheta[i] = hess.block(nx + nu, nx + nu, nth, nth);
  }
  return out;
}

}  // namespace

StageDerivatives fd_derivatives_at(const OCProblem& p, int k, const Vector& x, const Vector& u,
                                   const Vector& theta, double h) {
  const Eigen::Index nx = p.n_x, nu = p.n_u, nth = p.n_theta;
  StageDerivatives d;

  Vector z(nx + nu + nth);
  z << x, u, theta;
  auto cost = [&](const Vector& zz) {
    return p.stage_cost(zz.head(nx), zz.segment(nx, nu), k, zz.tail(nth));
  };
  const Vector cg = fd_grad(cost, z, h);
  const Matrix ch = fd_hess(cost, z, h);
  d.cx = cg.head(nx);
  d.cu = cg.segment(nx, nu);
  d.ctheta = cg.tail(nth);
  d.cxx = ch.block(0, 0, nx, nx);
  d.cux = ch.block(nx, 0, nu, nx);
  d.cuu = ch.block(nx, nx, nu, nu);
  d.cxtheta = ch.block(0, nx + nu, nx, nth);
  d.cutheta = ch.block(nx, nx + nu, nu, nth);
  d.cthetatheta = ch.block(nx + nu, nx + nu, nth, nth);

  const VecBlocks fb = fd_vector_fn(
      [&](const Vector& xx, const Vector& uu, const Vector& tt) { return p.dynamics(xx, uu, k, tt); },
      x, u, theta, nx, h);
  d.fx = fb.jx; d.fu = fb.ju; d.ftheta = fb.jtheta;
  d.fxx = fb.txx; d.fux = fb.tux; d.fuu = fb.tuu;
  d.fxtheta = fb.txtheta; d.futheta = fb.tutheta; d.fthetatheta = fb.tthetatheta;

  if (p.n_in > 0) {
    d.g = p.ineq(x, u, k, theta);
    const VecBlocks gb = fd_vector_fn(
        [&](const Vector& xx, const Vector& uu, const Vector& tt) { return p.ineq(xx, uu, k, tt); },
        x, u, theta, p.n_in, h);
    d.gx = gb.jx; d.gu = gb.ju; d.gtheta = gb.jtheta;
    d.gxx = gb.txx; d.gux = gb.tux; d.guu = gb.tuu;
    d.gxtheta = gb.txtheta; d.gutheta = gb.tutheta; d.gthetatheta = gb.tthetatheta;
  }
  if (p.n_eq > 0) {
    d.h = p.eq(x, u, k, theta);
    const VecBlocks hb = fd_vector_fn(
        [&](const Vector& xx, const Vector& uu, const Vector& tt) { return p.eq(xx, uu, k, tt); },
        x, u, theta, p.n_eq, h);
    d.hx = hb.jx; d.hu = hb.ju; d.htheta = hb.jtheta;
    d.hxx = hb.txx; d.hux = hb.tux; d.huu = hb.tuu;
    d.hxtheta = hb.txtheta; d.hutheta = hb.tutheta; d.hthetatheta = hb.tthetatheta;
  }
  return d;
}

TerminalDerivatives fd_terminal_derivatives_at(const OCProblem& p, const Vector& x,
                                               const Vector& theta, double h) {
  const Eigen::Index nx = p.n_x, nth = p.n_theta;
  Vector z(nx + nth);
  z << x, theta;
  auto cost = [&](const Vector& zz) { return p.terminal_cost(zz.head(nx), zz.tail(nth)); };
  const Vector g = fd_grad(cost, z, h);
  const Matrix hh = fd_hess(cost, z, h);
  TerminalDerivatives d;
  d.cx = g.head(nx);
  d.ctheta = g.tail(nth);
  d.cxx = hh.block(0, 0, nx, nx);
  d.cxtheta = hh.block(0, nx, nx, nth);
  d.cthetatheta = hh.block(nx, nx, nth, nth);
  return d;
}

}  // namespace ddp
