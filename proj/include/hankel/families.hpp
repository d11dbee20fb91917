#pragma once

// Closed-form determinants and inverses of the normalized moment matrices,
// one theorem per family. These are written independently of the kernel
// engine in gram.hpp; the two must agree exactly.

#include <hankel/family.hpp>
#include <hankel/gram.hpp>
#include <hankel/opoly.hpp>
#include <hankel/rational.hpp>

#include <algorithm>
#include <string_view>

namespace hankel {

enum class FormulaId {
  hermite_det,
  hermite_inverse,
  laguerre_det,
  laguerre_inverse,
  gegenbauer_det,
  gegenbauer_inverse,
  jacobi_det_as_printed,
  jacobi_det,
  jacobi_inverse,
  shifted_jacobi_det,
  shifted_jacobi_inverse,
};

inline std::string_view formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::hermite_det: return "hermite_det";
    case FormulaId::hermite_inverse: return "hermite_inverse";
    case FormulaId::laguerre_det: return "laguerre_det";
    case FormulaId::laguerre_inverse: return "laguerre_inverse";
    case FormulaId::gegenbauer_det: return "gegenbauer_det";
    case FormulaId::gegenbauer_inverse: return "gegenbauer_inverse";
    case FormulaId::jacobi_det_as_printed: return "jacobi_det_as_printed";
    case FormulaId::jacobi_det: return "jacobi_det";
    case FormulaId::jacobi_inverse: return "jacobi_inverse";
    case FormulaId::shifted_jacobi_det: return "shifted_jacobi_det";
    case FormulaId::shifted_jacobi_inverse: return "shifted_jacobi_inverse";
  }
  return "?";
}

template <typename T>
struct ExplicitResult {
  T value;
  FormulaId formula;
  bool normalized = true;
};

namespace detail {

/// Jacobi kernel weight k! (2k+s) (s)_k / (s (alpha+1)_k (beta+1)_k) with the
/// factor s = alpha + beta + 1 cancelled, so s = 0 is not a pole.
inline Rational jacobi_kernel_weight(const FamilySpec& spec, long k) {
  if (k == 0) return Rational{1};
  const Rational s = spec.alpha + spec.beta + 1;
  return factorial(k) * (2 * k + s) * pochhammer(s + 1, k - 1) /
         (pochhammer(spec.alpha + 1, k) * pochhammer(spec.beta + 1, k));
}

/// Monic norm of degree k for the Jacobi weight in the x basis:
/// 4^k k! (alpha+1)_k (beta+1)_k / ((s+k)_k (s+1)_{2k}).
inline Rational jacobi_monic_norm(const FamilySpec& spec, long k) {
  const Rational s = spec.alpha + spec.beta + 1;
  return factorial(k) * pochhammer(spec.alpha + 1, k) * pochhammer(spec.beta + 1, k) /
         (pochhammer(s + k, k) * pochhammer(s + 1, 2 * k));
}

}  // namespace detail

/// Determinant of moment_matrix(spec, n) from the closed-form products.
/// Barnes-G ratios are reduced to Pochhammer products before evaluation.
inline ExplicitResult<Rational> explicit_det(const FamilySpec& spec, std::size_t n) {
  spec.validate();
  const long nn = static_cast<long>(n);
  Rational det{1};
  switch (spec.family) {
    case Family::hermite:
      // 2^{-n(n+1)/2} G(n+2)
      det = barnes_g_int(nn + 2) / pow(Rational{2}, static_cast<unsigned>(nn * (nn + 1) / 2));
      return {det, FormulaId::hermite_det};
    case Family::laguerre:
      // G(n+2) G(a+n+2) / (G(a+1) Gamma(a+1)^{n+1}) = G(n+2) prod_k (a+1)_k
      det = barnes_g_int(nn + 2);
      for (long k = 0; k <= nn; ++k) det *= pochhammer(spec.alpha + 1, k);
      return {det, FormulaId::laguerre_det};
    case Family::gegenbauer: {
      // Each factor of the Gamma product over the Beta mass; consecutive
      // factors differ by r (2l+r-1) / (4 (l+r) (l+r-1)).
      const Rational& l = spec.lambda;
      Rational factor{1};
      for (long k = 0; k <= nn; ++k) {
        if (k > 0) factor *= k * (2 * l + k - 1) / (4 * (l + k) * (l + k - 1));
        det *= factor;
      }
      return {det, FormulaId::gegenbauer_det};
    }
    case Family::jacobi:
      for (long k = 0; k <= nn; ++k)
        det *= pow(Rational{4}, static_cast<unsigned>(k)) * detail::jacobi_monic_norm(spec, k);
      return {det, FormulaId::jacobi_det};
    case Family::shifted_jacobi:
      // The (1-x)/2 basis rescales the k-th monic norm by 4^{-k}.
      for (long k = 0; k <= nn; ++k) det *= detail::jacobi_monic_norm(spec, k);
      return {det, FormulaId::shifted_jacobi_det};
  }
  throw InvalidFamilySpec("explicit_det: unknown family");
}

/// Inverse of moment_matrix(spec, n), entry by entry from the finite sums
/// over k = max(i, j) .. n.
inline ExplicitResult<ExactMatrix> explicit_inverse(const FamilySpec& spec, std::size_t n) {
  spec.validate();
  const long nn = static_cast<long>(n);
  ExactMatrix inv(n);

  // anchor[i][k] = special value of degree k - i with parameters raised by i
  std::vector<std::vector<Rational>> anchor(n + 1, std::vector<Rational>(n + 1, Rational{0}));
  if (spec.family != Family::laguerre && spec.family != Family::shifted_jacobi)
    for (long i = 0; i <= nn; ++i)
      for (long k = i; k <= nn; ++k) anchor[i][k] = special_value(spec, k - i, i);

  FormulaId id = FormulaId::hermite_inverse;
  switch (spec.family) {
    case Family::hermite: id = FormulaId::hermite_inverse; break;
    case Family::laguerre: id = FormulaId::laguerre_inverse; break;
    case Family::gegenbauer: id = FormulaId::gegenbauer_inverse; break;
    case Family::jacobi: id = FormulaId::jacobi_inverse; break;
    case Family::shifted_jacobi: id = FormulaId::shifted_jacobi_inverse; break;
  }
  for (long i = 0; i <= nn; ++i) {
    for (long j = i; j <= nn; ++j) {
      Rational sum{0};
      switch (spec.family) {
        case Family::hermite: {
          for (long k = j; k <= nn; ++k) {
            if (anchor[i][k] == 0 || anchor[j][k] == 0) continue;
            sum += binomial(k, i) * anchor[i][k] * binomial(k, j) * anchor[j][k] /
                   (factorial(k) * pow(Rational{2}, static_cast<unsigned>(k)));
          }
          sum *= pow(Rational{2}, static_cast<unsigned>(i + j));
          break;
        }
        case Family::laguerre: {
          for (long k = j; k <= nn; ++k)
            sum += pochhammer(spec.alpha + 1, k) / factorial(k) * binomial(k, i) * binomial(k, j);
          sum /= pochhammer(spec.alpha + 1, i) * pochhammer(spec.alpha + 1, j);
          if ((i + j) % 2) sum = -sum;
          break;
        }
        case Family::gegenbauer: {
          const Rational& l = spec.lambda;
          for (long k = j; k <= nn; ++k) {
            if (anchor[i][k] == 0 || anchor[j][k] == 0) continue;
            sum += factorial(k) * (l + k) * anchor[i][k] * anchor[j][k] / pochhammer(2 * l, k);
          }
          sum *= pow(Rational{2}, static_cast<unsigned>(i + j)) * pochhammer(l, i) * pochhammer(l, j) /
                 (factorial(i) * factorial(j) * l);
          break;
        }
        case Family::jacobi: {
          const Rational s = spec.alpha + spec.beta + 1;
          for (long k = j; k <= nn; ++k)
            sum += detail::jacobi_kernel_weight(spec, k) * pochhammer(k + s, i) * anchor[i][k] *
                   pochhammer(k + s, j) * anchor[j][k];
          sum /= pow(Rational{-2}, static_cast<unsigned>(i + j)) * factorial(i) * factorial(j);
          break;
        }
        case Family::shifted_jacobi: {
          const Rational s = spec.alpha + spec.beta + 1;
          for (long k = j; k <= nn; ++k) {
            if (k == 0) {
              sum += 1;  // (2k+s) (s)_i (s)_j / (s (s)_k) at i = j = k = 0
              continue;
            }
            // (s)_i (s+i)_k (s)_j (s+j)_k / (s (s)_k) = (s+1)_{i+k-1} (s+k)_j
            sum += (2 * k + s) * pochhammer(spec.alpha + 1, k) / (factorial(k) * pochhammer(spec.beta + 1, k)) *
                   binomial(k, i) * binomial(k, j) * pochhammer(s + 1, i + k - 1) * pochhammer(s + k, j);
          }
          sum /= pochhammer(spec.alpha + 1, i) * pochhammer(spec.alpha + 1, j);
          if ((i + j) % 2) sum = -sum;
          break;
        }
      }
      inv(i, j) = sum;
      inv(j, i) = sum;
    }
  }
  return {std::move(inv), id};
}

}  // namespace hankel
