#pragma once

// Moment matrices and the kernel-polynomial engine.
//
// Everything here works on the Hankel symbol s_k = <w_0, w_k> of a basis
// w_k(x) = (scale * (x - anchor))^k under a probability measure. The
// orthogonal system comes from exact Gram-Schmidt; the inverse Gram matrix is
// the coefficient matrix of the reproducing kernel
//     k_n(x, y) = sum_m monic_m(x) monic_m(y) / h_m,
// read off with the Taylor-coefficient functionals at the anchor.

#include <hankel/family.hpp>
#include <hankel/matrix.hpp>
#include <hankel/opoly.hpp>
#include <hankel/rational.hpp>

#include <span>
#include <stdexcept>
#include <vector>

namespace hankel {

using ExactMatrix = Matrix<Rational>;

class NotPositiveDefinite : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// w_k(x) = (scale * (x - anchor))^k.
struct Basis {
  Rational anchor{0};
  Rational scale{1};

  Rational element(long k, const Rational& x) const { return pow(scale * (x - anchor), static_cast<unsigned>(k)); }

  friend bool operator==(const Basis&, const Basis&) = default;
};

/// Hermite, Laguerre, Gegenbauer: x^k. Jacobi: (-x)^k, which makes the Gram
/// entries the bare 2F1 values. Shifted Jacobi: ((1 - x)/2)^k.
inline Basis basis_of(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::jacobi: return {Rational{0}, Rational{-1}};
    case Family::shifted_jacobi: return {Rational{1}, Rational(-1, 2)};
    default: return {Rational{0}, Rational{1}};
  }
}

/// k-th moment under the normalized measure: of x^k for the first four
/// families, of the basis element ((1 - x)/2)^k for shifted Jacobi.
inline Rational moment(const FamilySpec& spec, long k) {
  spec.validate();
  if (k < 0) throw std::domain_error("moment: order must be nonnegative");
  switch (spec.family) {
    case Family::hermite:
      return k % 2 ? Rational{0} : pochhammer(Rational(1, 2), k / 2);
    case Family::laguerre:
      return pochhammer(spec.alpha + 1, k);
    case Family::gegenbauer:
      return k % 2 ? Rational{0} : pochhammer(Rational(1, 2), k / 2) / pochhammer(spec.lambda + 1, k / 2);
    case Family::jacobi: {
      const Rational up[] = {spec.beta + 1};
      const Rational lo[] = {spec.alpha + spec.beta + 2};
      Rational v = hyp_terminating(k, up, lo, Rational{2});
      return k % 2 ? -v : v;
    }
    case Family::shifted_jacobi:
      return pochhammer(spec.alpha + 1, k) / pochhammer(spec.alpha + spec.beta + 2, k);
  }
  throw InvalidFamilySpec("moment: unknown family");
}

/// s_0 .. s_{2n}: the Gram entry (i, j) is s_{i+j}.
inline std::vector<Rational> hankel_symbol(const FamilySpec& spec, std::size_t n) {
  std::vector<Rational> s(2 * n + 1);
  for (std::size_t k = 0; k < s.size(); ++k) {
    s[k] = moment(spec, static_cast<long>(k));
    if (spec.family == Family::jacobi && k % 2) s[k] = -s[k];
  }
  return s;
}

inline ExactMatrix moment_matrix(const FamilySpec& spec, std::size_t n) {
  return ExactMatrix::hankel(n, hankel_symbol(spec, n));
}

/// Monic orthogonal polynomials (coefficients in the basis) and their squared
/// norms h_m, m = 0..n.
struct OrthoTable {
  std::size_t n = 0;
  Basis basis;
  std::vector<PolyCoeffs> monic;
  std::vector<Rational> norms;
};

/// Classical Gram-Schmidt on w_0..w_n under <w_a, w_b> = symbol[a + b].
inline OrthoTable gram_schmidt(std::span<const Rational> symbol, std::size_t n, const Basis& basis = {}) {
  if (symbol.size() < 2 * n + 1) throw std::invalid_argument("gram_schmidt: symbol too short");
  OrthoTable table;
  table.n = n;
  table.basis = basis;
  table.monic.reserve(n + 1);
  table.norms.reserve(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    std::vector<Rational> c(m + 1, Rational{0});
    c[m] = 1;
    for (std::size_t j = 0; j < m; ++j) {
      // <w_m, monic_j> / h_j
      Rational proj{0};
      const auto& q = table.monic[j].coeffs;
      for (std::size_t b = 0; b < q.size(); ++b) proj += q[b] * symbol[m + b];
      proj /= table.norms[j];
      for (std::size_t b = 0; b < q.size(); ++b) c[b] -= proj * q[b];
    }
    // monic_m is orthogonal to lower degrees, so <monic_m, monic_m> = <monic_m, w_m>.
    Rational h{0};
    for (std::size_t b = 0; b <= m; ++b) h += c[b] * symbol[m + b];
    if (h <= 0) throw NotPositiveDefinite("gram_schmidt: Gram matrix is not positive definite at degree " +
                                          std::to_string(m));
    table.monic.push_back(PolyCoeffs{std::move(c)});
    table.norms.push_back(std::move(h));
  }
  return table;
}

inline OrthoTable gram_schmidt(const FamilySpec& spec, std::size_t n) {
  const auto symbol = hankel_symbol(spec, n);
  return gram_schmidt(symbol, n, basis_of(spec));
}

/// Inverse Gram matrix as the kernel coefficient matrix:
/// B(j, k) = sum_m a_{m,j} a_{m,k} / h_m.
inline ExactMatrix kernel_inverse(const OrthoTable& table) {
  ExactMatrix b(table.n);
  for (std::size_t m = 0; m <= table.n; ++m) {
    const auto& a = table.monic[m].coeffs;
    for (std::size_t j = 0; j <= m; ++j) {
      if (a[j] == 0) continue;
      const Rational aj = a[j] / table.norms[m];
      for (std::size_t k = 0; k <= m; ++k) b(j, k) += aj * a[k];
    }
  }
  return b;
}

inline Rational evaluate(const PolyCoeffs& p, const Basis& basis, const Rational& x) {
  const Rational u = basis.scale * (x - basis.anchor);
  Rational v{0};
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) v = v * u + *it;
  return v;
}

/// k_n(x, y) = sum_m monic_m(x) monic_m(y) / h_m.
inline Rational kernel_eval(const OrthoTable& table, const Rational& x, const Rational& y) {
  Rational sum{0};
  for (std::size_t m = 0; m <= table.n; ++m)
    sum += evaluate(table.monic[m], table.basis, x) * evaluate(table.monic[m], table.basis, y) / table.norms[m];
  return sum;
}

/// Determinant of the Gram matrix as the product of the monic norms.
inline Rational det_from_norms(const OrthoTable& table) {
  Rational d{1};
  for (const auto& h : table.norms) d *= h;
  return d;
}

}  // namespace hankel
