#ifndef SERIATE_MATRIX_HPP
#define SERIATE_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "seriate/errors.hpp"

namespace seriate {

using Vector = std::vector<double>;

// Dense row-major matrix. Sizes in this library stay small (a few dozen rows),
// so there is no sparse storage.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vector col(std::size_t j) const {
    Vector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = a_[i * cols_ + j];
    return c;
  }

  Vector row(std::size_t i) const {
    return Vector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<double> a_;
};

// Symmetric matrix stored in full; set() writes both triangles so the
// invariant m(i,j) == m(j,i) holds exactly, not within rounding.
class SymMatrix {
 public:
  SymMatrix() : n_(0) {}
  explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

  std::size_t order() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, double v) {
    a_[i * n_ + j] = v;
    a_[j * n_ + i] = v;
  }

  static SymMatrix from(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("matrix is not square");
    SymMatrix s(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = i; j < m.cols(); ++j) {
        if (m(i, j) != m(j, i)) throw BadParameter("matrix is not symmetric");
        s.set(i, j, m(i, j));
      }
    return s;
  }

  Matrix to_matrix() const {
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
    return m;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
  }

  bool operator==(const SymMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  std::size_t n_;
  std::vector<double> a_;
};

// Units-by-types data matrix. All entries must be nonnegative; the bundled
// graph family generators emit 0/1 incidence matrices.
class DataMatrix {
 public:
  DataMatrix() = default;
  explicit DataMatrix(Matrix m) : m_(std::move(m)) {
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = 0; j < m_.cols(); ++j)
        if (m_(i, j) < 0.0) throw BadParameter("data matrix entry is negative");
  }

  std::size_t rows() const { return m_.rows(); }
  std::size_t cols() const { return m_.cols(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix& matrix() const { return m_; }

  bool operator==(const DataMatrix& o) const { return m_ == o.m_; }

 private:
  Matrix m_;
};

}  // namespace seriate

#endif
