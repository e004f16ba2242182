#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

// Small dense linear-algebra utilities used by the backward recursions.
// Conventions: Eigen's default column-major storage throughout; vec()
// always column-stacks, independent of storage order.

namespace ddp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// 3-index tensor stored as d1 slices of d2 x d3 matrices.
/// Slice i holds the matrix paired with the i-th component of the
/// contracting vector (e.g. the Hessian of the i-th output of f).
struct Tensor3 {
  Tensor3() = default;
  Tensor3(Eigen::Index d1, Eigen::Index d2, Eigen::Index d3)
      : slices(static_cast<size_t>(d1), Matrix::Zero(d2, d3)) {}

  std::vector<Matrix> slices;

  Eigen::Index d1() const { return static_cast<Eigen::Index>(slices.size()); }
  Eigen::Index d2() const { return slices.empty() ? 0 : slices.front().rows(); }
  Eigen::Index d3() const { return slices.empty() ? 0 : slices.front().cols(); }

  Matrix& operator[](Eigen::Index i) { return slices[static_cast<size_t>(i)]; }
  const Matrix& operator[](Eigen::Index i) const { return slices[static_cast<size_t>(i)]; }
};

/// Column-stacking vectorization.
Vector vec(const Matrix& m);

/// Inverse of vec for a known shape.
Matrix unvec(const Vector& v, Eigen::Index rows, Eigen::Index cols);

/// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);

/// The nm x nm permutation matrix C with C*vec(A) = vec(A^T) for n x m A.
Matrix commutation_matrix(Eigen::Index n, Eigen::Index m);

/// Weighted sum of slices: contract(v, T) = sum_i v_i * T[i].
Matrix contract(const Vector& v, const Tensor3& t);

struct SingularMatrixError : std::runtime_error {
  explicit SingularMatrixError(double pivot, const std::string& what)
      : std::runtime_error(what), smallest_pivot(pivot) {}
  double smallest_pivot = 0.0;
};

/// Solves (h + rho*I) X = rhs. Uses LDLT when h is symmetric, partial-pivot
/// LU otherwise. Throws SingularMatrixError (carrying the smallest pivot
/// magnitude) when the shifted matrix is not invertible to working precision.
Matrix solve_regularized(const Matrix& h, const Matrix& rhs, double rho);

bool is_symmetric(const Matrix& m, double tol = 1e-12);

/// 0.5 * (m + m^T).
Matrix symmetrize(const Matrix& m);

bool all_finite(const Matrix& m);
bool all_finite(const Vector& v);

}  // namespace ddp
