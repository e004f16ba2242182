#include "ddp/linalg.hpp"

namespace ddp {

Vector vec(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) {
    throw std::invalid_argument("unvec: size mismatch");
  }
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix commutation_matrix(Eigen::Index n, Eigen::Index m) {
  Matrix c = Matrix::Zero(n * m, n * m);
  // vec(A) index of A(i,j) is j*n+i; vec(A^T) index is i*m+j.
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      c(i * m + j, j * n + i) = 1.0;
    }
  }
  return c;
}

Matrix contract(const Vector& v, const Tensor3& t) {
  if (v.size() != t.d1()) {
    throw std::invalid_argument("contract: vector length does not match tensor first dimension");
  }
  Matrix out = Matrix::Zero(t.d2(), t.d3());
  for (Eigen::Index i = 0; i < t.d1(); ++i) {
    if (v[i] != 0.0) out.noalias() += v[i] * t[i];
  }
  return out;
}

bool is_symmetric(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= tol * (1.0 + m.cwiseAbs().maxCoeff());
}

Matrix symmetrize(const Matrix& m) { return 0.5 * (m + m.transpose()); }

bool all_finite(const Matrix& m) { return m.allFinite(); }
bool all_finite(const Vector& v) { return v.allFinite(); }

Matrix solve_regularized(const Matrix& h, const Matrix& rhs, double rho) {
  if (h.rows() != h.cols()) throw std::invalid_argument("solve_regularized: h must be square");
  if (h.rows() != rhs.rows()) throw std::invalid_argument("solve_regularized: rhs rows mismatch");
  Matrix shifted = h;
  shifted.diagonal().array() += rho;

  const double scale = std::max(1.0, shifted.cwiseAbs().maxCoeff());
  const double pivot_tol = scale * h.rows() * std::numeric_limits<double>::epsilon();

  if (is_symmetric(shifted, 1e-12)) {
    Eigen::LDLT<Matrix> ldlt(shifted);
    const double min_pivot = ldlt.vectorD().cwiseAbs().minCoeff();
    if (ldlt.info() != Eigen::Success || min_pivot <= pivot_tol) {
      throw SingularMatrixError(min_pivot, "solve_regularized: matrix singular after regularization");
    }
    return ldlt.solve(rhs);
  }
  Eigen::PartialPivLU<Matrix> lu(shifted);
  const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (min_pivot <= pivot_tol) {
    throw SingularMatrixError(min_pivot, "solve_regularized: matrix singular after regularization");
  }
  return lu.solve(rhs);
}

}  // namespace ddp
