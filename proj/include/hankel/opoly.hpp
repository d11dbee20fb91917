#pragma once

// Standard-normalization polynomials of the five families: anchor values,
// coefficient tables and norms under the probability-normalized weight.

#include <hankel/family.hpp>
#include <hankel/rational.hpp>

#include <stdexcept>
#include <vector>

namespace hankel {

/// Coefficients of a polynomial in a family's basis: coeffs[i] multiplies
/// x^i, or (x - 1)^i for the shifted Jacobi family.
struct PolyCoeffs {
  std::vector<Rational> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  const Rational& leading() const { return coeffs.back(); }

  friend bool operator==(const PolyCoeffs&, const PolyCoeffs&) = default;
};

namespace detail {

/// Coefficients in x of sum_j c_j t^j where t = offset + slope * x.
inline std::vector<Rational> substitute_affine(const std::vector<Rational>& in_t, const Rational& offset,
                                               const Rational& slope) {
  std::vector<Rational> out(in_t.size(), Rational{0});
  std::vector<Rational> power{Rational{1}};  // coefficients of t^j in x
  for (std::size_t j = 0; j < in_t.size(); ++j) {
    for (std::size_t r = 0; r < power.size(); ++r) out[r] += in_t[j] * power[r];
    std::vector<Rational> next(power.size() + 1, Rational{0});
    for (std::size_t r = 0; r < power.size(); ++r) {
      next[r] += power[r] * offset;
      next[r + 1] += power[r] * slope;
    }
    power = std::move(next);
  }
  return out;
}

/// (a+1)_k / k! * 2F1(-k, k+a+b+1; a+1; t) as coefficients in t.
inline std::vector<Rational> jacobi_in_t(const Rational& a, const Rational& b, long k) {
  std::vector<Rational> c(k + 1);
  Rational term = pochhammer(a + 1, k) / factorial(k);
  for (long j = 0; j <= k; ++j) {
    c[j] = term;
    term *= Rational(j - k) * (k + a + b + 1 + j) / ((a + 1 + j) * (j + 1));
  }
  return c;
}

}  // namespace detail

/// Value of the degree-k polynomial with parameters raised by `shift` at the
/// family's anchor point (x = 1 for shifted Jacobi, x = 0 otherwise).
inline Rational special_value(const FamilySpec& spec, long k, long shift) {
  spec.validate();
  if (k < 0) return Rational{0};
  const FamilySpec s = spec.shifted_by(shift);
  switch (spec.family) {
    case Family::hermite: {
      // H_{2m}(0) = (-1)^m (2m)! / m!
      if (k % 2) return Rational{0};
      const long m = k / 2;
      Rational v = factorial(2 * m) / factorial(m);
      return m % 2 ? -v : v;
    }
    case Family::laguerre:
      return pochhammer(s.alpha + 1, k) / factorial(k);
    case Family::gegenbauer: {
      // C^l_{2m}(0) = (-1)^m (l)_m / m!
      if (k % 2) return Rational{0};
      const long m = k / 2;
      Rational v = pochhammer(s.lambda, m) / factorial(m);
      return m % 2 ? -v : v;
    }
    case Family::jacobi: {
      const Rational up[] = {k + s.alpha + s.beta + 1};
      const Rational lo[] = {s.alpha + 1};
      return pochhammer(s.alpha + 1, k) / factorial(k) * hyp_terminating(k, up, lo, Rational(1, 2));
    }
    case Family::shifted_jacobi:
      return pochhammer(s.alpha + 1, k) / factorial(k);
  }
  throw InvalidFamilySpec("special_value: unknown family");
}

/// Degree-k polynomial in the standard normalization, expanded in the family
/// basis.
inline PolyCoeffs poly_coeffs(const FamilySpec& spec, long k) {
  spec.validate();
  if (k < 0) throw std::domain_error("poly_coeffs: degree must be nonnegative");
  std::vector<Rational> c(k + 1, Rational{0});
  switch (spec.family) {
    case Family::hermite: {
      // (2x)^k 2F0(-k/2, (1-k)/2; -; -1/x^2)
      const Rational a(-k, 2), b(1 - k, 2);
      Rational term = pow(Rational{2}, static_cast<unsigned>(k));
      for (long j = 0; 2 * j <= k; ++j) {
        c[k - 2 * j] = term;
        term *= -(a + j) * (b + j) / (j + 1);
      }
      break;
    }
    case Family::laguerre: {
      Rational term = pochhammer(spec.alpha + 1, k) / factorial(k);
      for (long j = 0; j <= k; ++j) {
        c[j] = term;
        term *= Rational(j - k) / ((spec.alpha + 1 + j) * (j + 1));
      }
      break;
    }
    case Family::gegenbauer: {
      const Rational& l = spec.lambda;
      std::vector<Rational> t(k + 1);
      Rational term = pochhammer(2 * l, k) / factorial(k);
      for (long j = 0; j <= k; ++j) {
        t[j] = term;
        term *= Rational(j - k) * (2 * l + k + j) / ((l + Rational(1, 2) + j) * (j + 1));
      }
      c = detail::substitute_affine(t, Rational(1, 2), Rational(-1, 2));
      break;
    }
    case Family::jacobi:
      c = detail::substitute_affine(detail::jacobi_in_t(spec.alpha, spec.beta, k), Rational(1, 2), Rational(-1, 2));
      break;
    case Family::shifted_jacobi: {
      // t = (1 - x)/2 = -(x - 1)/2, so the t^j coefficient picks up (-1/2)^j.
      c = detail::jacobi_in_t(spec.alpha, spec.beta, k);
      Rational scale{1};
      for (long j = 0; j <= k; ++j) {
        c[j] *= scale;
        scale *= Rational(-1, 2);
      }
      break;
    }
  }
  return PolyCoeffs{std::move(c)};
}

/// Squared norm of the standard-normalization polynomial of degree m under
/// the weight scaled to total mass one.
inline Rational norm_squared(const FamilySpec& spec, long m) {
  spec.validate();
  if (m < 0) throw std::domain_error("norm_squared: degree must be nonnegative");
  Rational h{1};
  switch (spec.family) {
    case Family::hermite:
      return pow(Rational{2}, static_cast<unsigned>(m)) * factorial(m);
    case Family::laguerre:
      return pochhammer(spec.alpha + 1, m) / factorial(m);
    case Family::gegenbauer:
      for (long r = 1; r <= m; ++r)
        h *= (2 * spec.lambda + r - 1) * (spec.lambda + r - 1) / (r * (spec.lambda + r));
      return h;
    case Family::jacobi:
    case Family::shifted_jacobi: {
      // h_1 is written with alpha + beta + 1 cancelled so alpha + beta = -1
      // is not a pole.
      const Rational s = spec.alpha + spec.beta + 1;
      if (m >= 1) h = (spec.alpha + 1) * (spec.beta + 1) / (s + 2);
      for (long r = 2; r <= m; ++r)
        h *= (spec.alpha + r) * (spec.beta + r) * (2 * r - 2 + s) / (r * (2 * r + s) * (s + r - 1));
      return h;
    }
  }
  throw InvalidFamilySpec("norm_squared: unknown family");
}

}  // namespace hankel
