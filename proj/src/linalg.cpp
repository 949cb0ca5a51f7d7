#include "steklov/linalg.hpp"

#include "steklov/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace steklov {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

std::vector<double> Matrix::column(std::size_t j) const {
  std::vector<double> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return std::sqrt(s);
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const double ail = a(i, l);
      if (ail == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += ail * b(l, j);
    }
  return c;
}

SymmetricMatrix SymmetricMatrix::from_matrix(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) throw DomainError("SymmetricMatrix: matrix is not square");
  const std::size_t n = a.rows();
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) asym = std::max(asym, std::abs(a(i, j) - a(j, i)));
  if (asym > tol * a.frobenius_norm()) throw DomainError("SymmetricMatrix: input is not symmetric");
  SymmetricMatrix s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) s.set(i, j, 0.5 * (a(i, j) + a(j, i)));
  return s;
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double v) {
  store_(i, j) = v;
  store_(j, i) = v;
}

void SymmetricMatrix::add(std::size_t i, std::size_t j, double v) {
  store_(i, j) += v;
  if (i != j) store_(j, i) = store_(i, j);
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) t += store_(i, i);
  return t;
}

EigenDecomposition sym_eigen(const SymmetricMatrix& input) {
  constexpr int kMaxSweeps = 50;
  const std::size_t n = input.dim();
  Matrix a = input.dense();
  Matrix v = Matrix::identity(n);
  const double norm = a.frobenius_norm();

  const auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  bool converged = norm == 0.0 || off_norm() < 1e-14 * norm;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle from tan(2 phi) = 2 a_pq / (a_qq - a_pp), smaller root.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double apr = a(p, r);
          const double aqr = a(q, r);
          a(p, r) = c * apr - s * aqr;
          a(q, r) = s * apr + c * aqr;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
    converged = off_norm() < 1e-14 * norm;
  }
  if (!converged) throw ConvergenceError("sym_eigen: Jacobi did not converge in 50 sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, j) = v(r, order[j]);
  }
  return out;
}

Matrix cholesky(const SymmetricMatrix& b) {
  const std::size_t n = b.dim();
  const double floor = 1e-13 * b.frobenius_norm();
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = b(j, j);
    for (std::size_t s = 0; s < j; ++s) d -= l(j, s) * l(j, s);
    if (!(d > floor)) throw DefinitenessError("cholesky: matrix is not positive definite");
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double x = b(i, j);
      for (std::size_t s = 0; s < j; ++s) x -= l(i, s) * l(j, s);
      l(i, j) = x / ljj;
    }
  }
  return l;
}

EigenDecomposition gen_sym_eigen(const SymmetricMatrix& a, const SymmetricMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("gen_sym_eigen: dimension mismatch");
  const std::size_t n = a.dim();
  const Matrix l = cholesky(b);

  // Y = L^{-1} A by forward substitution on columns, then C = L^{-1} Y^T.
  const auto forward = [&](Matrix rhs) {
    for (std::size_t col = 0; col < rhs.cols(); ++col)
      for (std::size_t i = 0; i < n; ++i) {
        double x = rhs(i, col);
        for (std::size_t s = 0; s < i; ++s) x -= l(i, s) * rhs(s, col);
        rhs(i, col) = x / l(i, i);
      }
    return rhs;
  };
  const Matrix y = forward(a.dense());
  const Matrix c = forward(y.transpose());

  SymmetricMatrix reduced(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) reduced.set(i, j, 0.5 * (c(i, j) + c(j, i)));

  EigenDecomposition eig = sym_eigen(reduced);

  // x = L^{-T} z by back substitution.
  Matrix& z = eig.vectors;
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t ii = n; ii-- > 0;) {
      double x = z(ii, col);
      for (std::size_t s = ii + 1; s < n; ++s) x -= l(s, ii) * z(s, col);
      z(ii, col) = x / l(ii, ii);
    }
  return eig;
}

}  // namespace steklov
