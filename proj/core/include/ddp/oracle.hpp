#pragma once

#include "ddp/jet2.hpp"
#include "ddp/problem.hpp"

// Bridges a model written as templated scalar physics (double for values,
// Jet2 for exact first/second derivatives) onto the OCProblem callable
// surface.
//
// Model concept:
//   int n_x() / n_u() / n_theta() / n_in() / n_eq() const;
//   template <class T> T stage_cost(const std::vector<T>& x, const std::vector<T>& u,
//                                   int k, const std::vector<T>& th) const;
//   template <class T> T terminal_cost(const std::vector<T>& x, const std::vector<T>& th) const;
//   template <class T> std::vector<T> dynamics(x, u, k, th) const;
//   template <class T> std::vector<T> ineq(x, u, k, th) const;  // size n_in()
//   template <class T> std::vector<T> eq(x, u, k, th) const;    // size n_eq()

namespace ddp {

inline std::vector<double> to_std(const Vector& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

inline Vector to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

inline std::vector<Jet2> to_consts(const Vector& v) {
  std::vector<Jet2> out;
  out.reserve(static_cast<size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out.emplace_back(v[i]);
  return out;
}

namespace detail {

struct JetLayout {
  Eigen::Index nx, nu, nth;
  bool with_theta;
  Eigen::Index dim() const { return nx + nu + (with_theta ? nth : 0); }
};

inline void extract_scalar(const Jet2& s, const JetLayout& L, Vector& gx, Vector& gu, Vector& gth,
                           Matrix& hxx, Matrix& hux, Matrix& huu, Matrix& hxth, Matrix& huth,
                           Matrix& hthth) {
  const Eigen::Index n = L.dim();
  const Vector g = s.grad(n);
  const Matrix h = s.hess(n);
  gx = g.head(L.nx);
  gu = g.segment(L.nx, L.nu);
  hxx = h.block(0, 0, L.nx, L.nx);
  hux = h.block(L.nx, 0, L.nu, L.nx);
  huu = h.block(L.nx, L.nx, L.nu, L.nu);
  if (L.with_theta) {
    gth = g.tail(L.nth);
    hxth = h.block(0, L.nx + L.nu, L.nx, L.nth);
    huth = h.block(L.nx, L.nx + L.nu, L.nu, L.nth);
    hthth = h.block(L.nx + L.nu, L.nx + L.nu, L.nth, L.nth);
  } else {
    gth = Vector::Zero(L.nth);
    hxth = Matrix::Zero(L.nx, L.nth);
    huth = Matrix::Zero(L.nu, L.nth);
    hthth = Matrix::Zero(L.nth, L.nth);
  }
}

inline void extract_vector(const std::vector<Jet2>& f, const JetLayout& L, Vector& val, Matrix& jx,
                           Matrix& ju, Matrix& jth, Tensor3& txx, Tensor3& tux, Tensor3& tuu,
                           Tensor3& txth, Tensor3& tuth, Tensor3& tthth) {
  const Eigen::Index m = static_cast<Eigen::Index>(f.size());
  const Eigen::Index n = L.dim();
  val.resize(m);
  jx.resize(m, L.nx);
  ju.resize(m, L.nu);
  jth = Matrix::Zero(m, L.nth);
  txx = Tensor3(m, L.nx, L.nx);
  tux = Tensor3(m, L.nu, L.nx);
  tuu = Tensor3(m, L.nu, L.nu);
  txth = Tensor3(m, L.nx, L.nth);
  tuth = Tensor3(m, L.nu, L.nth);
  tthth = Tensor3(m, L.nth, L.nth);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Jet2& s = f[static_cast<size_t>(i)];
    val[i] = s.value();
    const Vector g = s.grad(n);
    const Matrix h = s.hess(n);
    jx.row(i) = g.head(L.nx).transpose();
    ju.row(i) = g.segment(L.nx, L.nu).transpose();
    txx[i] = h.block(0, 0, L.nx, L.nx);
    tux[i] = h.block(L.nx, 0, L.nu, L.nx);
    tuu[i] = h.block(L.nx, L.nx, L.nu, L.nu);
    if (L.with_theta) {
      jth.row(i) = g.tail(L.nth).transpose();
      txth[i] = h.block(0, L.nx + L.nu, L.nx, L.nth);
      tuth[i] = h.block(L.nx, L.nx + L.nu, L.nu, L.nth);
      tthth[i] = h.block(L.nx + L.nu, L.nx + L.nu, L.nth, L.nth);
    }
  }
}

}  // namespace detail

template <class Model>
OCProblem make_problem(Model model, int horizon) {
  OCProblem p;
  p.n_x = model.n_x();
  p.n_u = model.n_u();
  p.n_theta = model.n_theta();
  p.n_in = model.n_in();
  p.n_eq = model.n_eq();
  p.N = horizon;

  p.stage_cost = [model](const Vector& x, const Vector& u, int k, const Vector& th) {
    return model.stage_cost(to_std(x), to_std(u), k, to_std(th));
  };
  p.terminal_cost = [model](const Vector& x, const Vector& th) {
    return model.terminal_cost(to_std(x), to_std(th));
  };
  p.dynamics = [model](const Vector& x, const Vector& u, int k, const Vector& th) {
    return to_vector(model.dynamics(to_std(x), to_std(u), k, to_std(th)));
  };
  if (p.n_in > 0) {
    p.ineq = [model](const Vector& x, const Vector& u, int k, const Vector& th) {
      return to_vector(model.ineq(to_std(x), to_std(u), k, to_std(th)));
    };
  }
  if (p.n_eq > 0) {
    p.eq = [model](const Vector& x, const Vector& u, int k, const Vector& th) {
      return to_vector(model.eq(to_std(x), to_std(u), k, to_std(th)));
    };
  }

  const Eigen::Index nx = p.n_x, nu = p.n_u, nth = p.n_theta;
  const bool has_in = p.n_in > 0, has_eq = p.n_eq > 0;

  p.stage_derivs = [model, nx, nu, nth, has_in, has_eq](const Vector& x, const Vector& u, int k,
                                                        const Vector& th, DerivScope scope) {
    detail::JetLayout L{nx, nu, nth, scope == DerivScope::kFull};
    const Eigen::Index dim = L.dim();
    const std::vector<Jet2> xs = seed_variables(x, dim, 0);
    const std::vector<Jet2> us = seed_variables(u, dim, nx);
    const std::vector<Jet2> ths =
        L.with_theta ? seed_variables(th, dim, nx + nu) : to_consts(th);

    StageDerivatives d;
    const Jet2 c = model.stage_cost(xs, us, k, ths);
    detail::extract_scalar(c, L, d.cx, d.cu, d.ctheta, d.cxx, d.cux, d.cuu, d.cxtheta, d.cutheta,
                           d.cthetatheta);
    Vector fval;
    detail::extract_vector(model.dynamics(xs, us, k, ths), L, fval, d.fx, d.fu, d.ftheta, d.fxx,
                           d.fux, d.fuu, d.fxtheta, d.futheta, d.fthetatheta);
    if (has_in) {
      detail::extract_vector(model.ineq(xs, us, k, ths), L, d.g, d.gx, d.gu, d.gtheta, d.gxx, d.gux,
                             d.guu, d.gxtheta, d.gutheta, d.gthetatheta);
    } else {
      d.g = Vector::Zero(0);
    }
    if (has_eq) {
      detail::extract_vector(model.eq(xs, us, k, ths), L, d.h, d.hx, d.hu, d.htheta, d.hxx, d.hux,
                             d.huu, d.hxtheta, d.hutheta, d.hthetatheta);
    } else {
      d.h = Vector::Zero(0);
    }
    return d;
  };

  p.terminal_derivs = [model, nx, nth](const Vector& x, const Vector& th, DerivScope scope) {
    const bool with_theta = scope == DerivScope::kFull;
    const Eigen::Index dim = nx + (with_theta ? nth : 0);
    const std::vector<Jet2> xs = seed_variables(x, dim, 0);
    const std::vector<Jet2> ths = with_theta ? seed_variables(th, dim, nx) : to_consts(th);
    const Jet2 c = model.terminal_cost(xs, ths);
    TerminalDerivatives d;
    const Vector g = c.grad(dim);
    const Matrix h = c.hess(dim);
    d.cx = g.head(nx);
    d.cxx = h.block(0, 0, nx, nx);
    if (with_theta) {
      d.ctheta = g.tail(nth);
      d.cxtheta = h.block(0, nx, nx, nth);
      d.cthetatheta = h.block(nx, nx, nth, nth);
    } else {
      d.ctheta = Vector::Zero(nth);
      d.cxtheta = Matrix::Zero(nx, nth);
      d.cthetatheta = Matrix::Zero(nth, nth);
    }
    return d;
  };

  return p;
}

}  // namespace ddp
