#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace steklov {

// Dense row-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<double> column(std::size_t j) const;
  std::span<const double> data() const { return data_; }

  double frobenius_norm() const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Square matrix whose entries satisfy a(i,j) == a(j,i) bit-for-bit.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t dim) : store_(dim, dim) {}

  /// Takes a square matrix whose asymmetry max|A - A^T| is below
  /// tol * ||A||_F (DomainError otherwise) and stores (A + A^T)/2.
  static SymmetricMatrix from_matrix(const Matrix& a, double tol = 1e-13);

  std::size_t dim() const { return store_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return store_(i, j); }

  /// Writes both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, double v);
  void add(std::size_t i, std::size_t j, double v);

  double trace() const;
  double frobenius_norm() const { return store_.frobenius_norm(); }
  const Matrix& dense() const { return store_; }

 private:
  Matrix store_;
};

/// Ascending eigenvalues; column j of vectors belongs to values[j].
struct EigenDecomposition {
  std::vector<double> values;
  Matrix vectors;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm falls below
/// 1e-14 ||A||_F. Throws ConvergenceError after 50 sweeps.
EigenDecomposition sym_eigen(const SymmetricMatrix& a);

/// A v = lambda B v for B positive definite, by Cholesky reduction to a
/// standard problem. Vectors are B-orthonormal. Throws DefinitenessError if a
/// Cholesky pivot drops below 1e-13 ||B||_F.
EigenDecomposition gen_sym_eigen(const SymmetricMatrix& a, const SymmetricMatrix& b);

/// Lower-triangular L with B = L L^T.
Matrix cholesky(const SymmetricMatrix& b);

}  // namespace steklov
