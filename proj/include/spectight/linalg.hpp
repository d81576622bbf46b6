#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spectight {

/// Dense row-major matrix. Only the operations the solvers here need.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  std::vector<double> column(int j) const {
    std::vector<double> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<double> row(int i) const {
    return {a_.begin() + static_cast<long>(i) * cols_, a_.begin() + static_cast<long>(i + 1) * cols_};
  }

  std::vector<double> multiply(const std::vector<double>& x) const;

  /// max |a_ij|
  double max_abs() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

/// Thrown when the iterative eigensolver exhausts its sweep budget.
struct EigensolverError : std::runtime_error {
  EigensolverError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual(best_residual) {}
  double best_residual;
};

struct SymmetricEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // orthonormal, column k pairs with values[k]
  double residual_norm = 0.0;  // max_k ||A u_k - lambda_k u_k||_2
  int sweeps = 0;
};

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Eigenvalues ascending; each eigenvector's first entry of largest magnitude
/// is made positive so results are reproducible.
SymmetricEigen jacobi_eigendecompose(const Matrix& a, int max_sweeps = 100);

/// Singular values of an n x m matrix (n >= m), via the m x m Gram matrix.
std::vector<double> singular_values(const Matrix& a);

/// Number of singular values >= rel_tol * (largest singular value).
int numerical_rank(const Matrix& a, double rel_tol);

}  // namespace spectight
