#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "braidalg/errors.hpp"

namespace braidalg::exact {

/// Dense row-major matrix over an exact field T (Rational or RatFunc).
/// T must provide + - * /, is_zero(), zero_like() and one_like().
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw UsageError("matrix dimensions must be positive");
  }
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows == 0 || cols == 0) throw UsageError("matrix dimensions must be positive");
    if (data_.size() != rows * cols) throw UsageError("matrix entry count does not match dimensions");
  }

  static Matrix identity(std::size_t n, const T& prototype) {
    Matrix m(n, n, prototype.zero_like());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = prototype.one_like();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const std::vector<T>& entries() const { return data_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& e : data_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }
  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& e : data_) n += e.is_zero() ? 0 : 1;
    return n;
  }
  bool is_identity() const { return square() && *this == identity(rows_, data_.front()); }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& e : r.data_) e = -e;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw UsageError("incompatible dimensions for product: " + a.shape() + " * " + b.shape());
    }
    Matrix r(a.rows_, b.cols_, a.data_.front().zero_like());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!bkj.is_zero()) r(i, j) += aik * bkj;
        }
      }
    }
    return r;
  }

  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix r = m;
    for (auto& e : r.data_) e = s * e;
    return r;
  }

  Matrix pow(unsigned e) const {
    require_square("pow");
    Matrix result = identity(rows_, data_.front());
    Matrix base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  /// Determinant by Bareiss fraction-free elimination.
  T determinant() const {
    require_square("determinant");
    Matrix a = *this;
    const std::size_t n = rows_;
    T prev = data_.front().one_like();
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a(k, k).is_zero()) {
        std::size_t p = k + 1;
        while (p < n && a(p, k).is_zero()) ++p;
        if (p == n) return data_.front().zero_like();
        a.swap_rows(k, p);
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
        }
        a(i, k) = a(i, k).zero_like();
      }
      prev = a(k, k);
    }
    T det = a(n - 1, n - 1);
    return negate ? -det : det;
  }

  /// Exact two-sided inverse. Fraction-free Gauss-Jordan on [A | I]: after
  /// the sweep the left block is p*I, with p = +-det(A), and the right
  /// block is p*A^{-1}; one division pass finishes. Throws MathError
  /// ("singular") when no pivot exists.
  Matrix inverse() const {
    require_square("inverse");
    const std::size_t n = rows_;
    const T& proto = data_.front();
    Matrix aug(n, 2 * n, proto.zero_like());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = proto.one_like();
    }
    T prev = proto.one_like();
    for (std::size_t k = 0; k < n; ++k) {
      if (aug(k, k).is_zero()) {
        std::size_t p = k + 1;
        while (p < n && aug(p, k).is_zero()) ++p;
        if (p == n) throw MathError("singular matrix: determinant is 0");
        aug.swap_rows(k, p);
      }
      const T pivot = aug(k, k);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        const T factor = aug(i, k);
        for (std::size_t j = 0; j < 2 * n; ++j) {
          if (j == k) continue;
          T v = pivot * aug(i, j);
          if (!factor.is_zero() && !aug(k, j).is_zero()) v -= factor * aug(k, j);
          aug(i, j) = v / prev;
        }
        aug(i, k) = proto.zero_like();
      }
      prev = pivot;
    }
    Matrix inv(n, n, proto.zero_like());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j) / prev;
    }
    return inv;
  }

  /// Kronecker product this (x) other.
  Matrix kron(const Matrix& o) const {
    Matrix r(rows_ * o.rows_, cols_ * o.cols_, data_.front().zero_like());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if ((*this)(i, j).is_zero()) continue;
        for (std::size_t k = 0; k < o.rows_; ++k)
          for (std::size_t l = 0; l < o.cols_; ++l) r(i * o.rows_ + k, j * o.cols_ + l) = (*this)(i, j) * o(k, l);
      }
    return r;
  }

  template <typename F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& e : data_) out.push_back(f(e));
    return Matrix<U>(rows_, cols_, std::move(out));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw UsageError("incompatible dimensions: " + shape() + " vs " + o.shape());
    }
  }
  void require_square(const char* what) const {
    if (!square()) throw UsageError(std::string(what) + " needs a square matrix, got " + shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace braidalg::exact
