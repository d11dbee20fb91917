#pragma once

// Formula-independent exact linear algebra. These routines know nothing about
// orthogonal polynomials; every closed form in the library is judged against
// them.

#include <hankel/matrix.hpp>
#include <hankel/rational.hpp>

#include <stdexcept>
#include <vector>

namespace hankel {

class SingularMatrix : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/*
 * Fraction-free (Bareiss) elimination over an integral domain T.
 *
 * After step k every remaining entry is a (k+1)x(k+1) minor of the input, so
 * the division by the previous pivot is always exact. Pivots are the first
 * nonzero entry in the column; each row exchange flips the sign.
 */
template <typename T>
T bareiss_det_integral(Matrix<T> a) {
  const std::size_t size = a.rows();
  T sign(1);
  T previous(1);
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t pivot = k;
    while (pivot < size && a(pivot, k) == 0) ++pivot;
    if (pivot == size) return T(0);
    if (pivot != k) {
      a.swap_rows(pivot, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        T t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = t / previous;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(size - 1, size - 1);
}

/// Determinant of a rational matrix: each row is scaled to integers by the
/// lcm of its denominators, then Bareiss runs on big integers.
inline Rational bareiss_det(const Matrix<Rational>& m) {
  Matrix<Integer> scaled(m.n());
  Integer scale(1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer row_lcm(1);
    for (std::size_t j = 0; j < m.rows(); ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.rows(); ++j) scaled(i, j) = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
    scale *= row_lcm;
  }
  Rational det{bareiss_det_integral(std::move(scaled)), scale};
  det.canonicalize();
  return det;
}

/// Exact Gauss-Jordan inverse over a field. Throws SingularMatrix when a
/// column has no nonzero pivot left.
template <typename T>
Matrix<T> gauss_inverse(Matrix<T> a) {
  const std::size_t size = a.rows();
  Matrix<T> inv = Matrix<T>::identity(a.n());
  for (std::size_t k = 0; k < size; ++k) {
    std::size_t pivot = k;
    while (pivot < size && a(pivot, k) == 0) ++pivot;
    if (pivot == size) throw SingularMatrix("gauss_inverse: matrix is singular");
    a.swap_rows(pivot, k);
    inv.swap_rows(pivot, k);

    const T p = a(k, k);
    for (std::size_t j = 0; j < size; ++j) {
      a(k, j) /= p;
      inv(k, j) /= p;
    }
    for (std::size_t i = 0; i < size; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const T f = a(i, k);
      for (std::size_t j = 0; j < size; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

}  // namespace hankel
