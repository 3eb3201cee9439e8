#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kspin {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
  }
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix column(const std::vector<T>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  T& at(std::size_t i, std::size_t j) {
    check(i, j);
    return (*this)(i, j);
  }
  const T& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return (*this)(i, j);
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw std::out_of_range("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in apply");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      T s = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if (v[j] != 0 && (*this)(i, j) != 0) s += (*this)(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

  Matrix& operator+=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.a_) x = -x;
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) c(i, j) += x * b(k, j);
      }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  const std::vector<T>& data() const { return a_; }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  }
  void same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<T> a_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : Matrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
    std::size_t j = 0;
    for (long x : r) (*this)(i, j++) = x;
    ++i;
  }
}

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

RatMatrix to_rat(const IntMatrix& m);
RatVector to_rat(const IntVector& v);
bool is_integral(const RatMatrix& m);
// Throws std::domain_error when an entry has a denominator.
IntMatrix to_int(const RatMatrix& m);
IntVector to_int(const RatVector& v);

Rat determinant(const RatMatrix& m);
Int determinant(const IntMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

// Basis of the right kernel as n×1 columns (reduced echelon parametrization).
std::vector<RatMatrix> rational_kernel(const RatMatrix& a);
// Same kernel, returned as columns of one matrix; nullopt if the kernel is zero.
std::optional<RatMatrix> kernel_matrix(const RatMatrix& a);

// Vertical concatenation.
template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix<T> m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}
template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix<T> m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

struct SmithForm {
  std::vector<Int> invariant_factors;  // length min(rows, cols); zeros trail
  IntMatrix left;
  IntMatrix right;
};

// left·A·right = diag(invariant_factors), each factor dividing the next.
SmithForm smith_normal_form(const IntMatrix& a);

struct RationalSquare {
  bool is_square = false;
  std::optional<Rat> root;  // nonnegative root when is_square
};

// Throws std::invalid_argument on q == 0.
RationalSquare is_rational_square(const Rat& q);

Int gcd_of(const IntVector& v);
std::string to_string(const Int& x);
std::string to_string(const Rat& x);

}  // namespace kspin
