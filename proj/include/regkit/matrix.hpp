#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace regkit {

/// Small dense row-major matrix over any ring-like value type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  Matrix map(const std::function<T(const T&)>& fn) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = fn(x);
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix out = a;
    for (size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = a.data_[k] + b.data_[k];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix out = a;
    for (size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = a.data_[k] - b.data_[k];
    return out;
  }

  /// Product with the given zero used to seed each entry.
  static Matrix multiply(const Matrix& a, const Matrix& b, const T& zero) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_, zero);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t j = 0; j < b.cols_; ++j) {
        T acc = zero;
        for (size_t k = 0; k < a.cols_; ++k) acc = acc + a(i, k) * b(k, j);
        out(i, j) = acc;
      }
    return out;
  }

  /// Kronecker product a (x) b.
  static Matrix kronecker(const Matrix& a, const Matrix& b, const T& zero) {
    Matrix out(a.rows_ * b.rows_, a.cols_ * b.cols_, zero);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t j = 0; j < a.cols_; ++j)
        for (size_t k = 0; k < b.rows_; ++k)
          for (size_t l = 0; l < b.cols_; ++l) out(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
    return out;
  }

  static Matrix identity(size_t n, const T& zero, const T& one) {
    Matrix out(n, n, zero);
    for (size_t i = 0; i < n; ++i) out(i, i) = one;
    return out;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

}  // namespace regkit
