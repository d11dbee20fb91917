#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hankel {

/// Dense square matrix of size (n+1) x (n+1), indexed 0..n, row-major.
template <typename T>
class Matrix {
public:
  Matrix() : Matrix(0) {}

  /// Zero matrix of order n + 1.
  explicit Matrix(std::size_t n) : n_(n), entries_((n + 1) * (n + 1), T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i <= n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Hankel matrix entry(i, j) = symbol[i + j]; symbol needs 2n + 1 values.
  template <typename Symbol>
  static Matrix hankel(std::size_t n, const Symbol& symbol) {
    if (symbol.size() < 2 * n + 1) throw std::invalid_argument("Matrix::hankel: symbol too short");
    Matrix m(n);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) m(i, j) = symbol[i + j];
    return m;
  }

  /// The largest index; the matrix has n() + 1 rows.
  std::size_t n() const { return n_; }
  std::size_t rows() const { return n_ + 1; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * (n_ + 1) + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * (n_ + 1) + j]; }

  const std::vector<T>& entries() const { return entries_; }

  bool is_symmetric() const {
    for (std::size_t i = 0; i <= n_; ++i)
      for (std::size_t j = i + 1; j <= n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j <= n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.entries_ == b.entries_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("Matrix product: size mismatch");
    Matrix c(a.n_);
    for (std::size_t i = 0; i <= a.n_; ++i)
      for (std::size_t k = 0; k <= a.n_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j <= a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

private:
  std::size_t n_;
  std::vector<T> entries_;
};

}  // namespace hankel
