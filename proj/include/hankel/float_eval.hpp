#pragma once

// Floating-point side path: the transcendental total masses that turn the
// normalized (rational) matrices back into the raw weight's matrices, and the
// literal evaluation of the printed Jacobi determinant for the errata report.
// Nothing on the exact path depends on this header.

#include <hankel/family.hpp>
#include <hankel/format.hpp>
#include <hankel/gram.hpp>
#include <hankel/oracle.hpp>
#include <hankel/rational.hpp>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <limits>
#include <optional>
#include <string>

namespace hankel {

using Float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<130>>;

/// Largest `digits` accepted by the float path.
inline constexpr int max_float_digits = 100;

inline void check_digits(int digits) {
  if (digits < 1 || digits > max_float_digits)
    throw std::invalid_argument("digits must be between 1 and " + std::to_string(max_float_digits));
}

inline Float to_float(const Rational& q) { return Float(q.get_num().get_str()) / Float(q.get_den().get_str()); }

/// Exact rational value of a Float (through its full decimal expansion).
inline Rational to_rational(const Float& x) {
  return parse_decimal(x.str(std::numeric_limits<Float>::max_digits10, std::ios_base::scientific));
}

/// Total mass of the family's raw weight: sqrt(pi), Gamma(a+1),
/// B(1/2, l+1/2), 2^{a+b+1} Gamma(a+1) Gamma(b+1) / Gamma(a+b+2).
inline Float unnormalized_scale(const FamilySpec& spec, int digits) {
  spec.validate();
  check_digits(digits);
  using boost::math::tgamma;
  const Float root_pi = boost::math::constants::root_pi<Float>();
  switch (spec.family) {
    case Family::hermite:
      return root_pi;
    case Family::laguerre:
      return tgamma(to_float(spec.alpha + 1));
    case Family::gegenbauer:
      return root_pi * tgamma(to_float(spec.lambda + Rational(1, 2))) / tgamma(to_float(spec.lambda + 1));
    case Family::jacobi:
    case Family::shifted_jacobi: {
      const Float a = to_float(spec.alpha), b = to_float(spec.beta);
      return pow(Float(2), a + b + 1) * tgamma(a + 1) * tgamma(b + 1) / tgamma(a + b + 2);
    }
  }
  throw InvalidFamilySpec("unnormalized_scale: unknown family");
}

/// Literal evaluation of the printed Jacobi determinant next to exact
/// references.
struct AsPrintedReport {
  std::optional<Float> printed;       // empty where the printed form has a Gamma pole
  Rational exact;                     // Bareiss determinant of moment_matrix(spec, n)
  std::optional<Rational> printed_matrix_det;  // Bareiss det of the matrix with lower parameter a+b+1
  bool agrees = false;                // |printed - exact| / exact < 10^{-digits/2}
  std::string note;
};

/*
 * The printed closed form for det(2F1(-i-j, b+1; a+b+1; 2)) is
 *
 *   (Gamma(s) 2^{-(2a+2b+n+1)} pi / Gamma(s)^2)^{n+1}
 *     * G(n+2) G(s/2)^2 G((s+1)/2)^2 / (G(s/2+n+1)^2 G((s+1)/2+n+1)^2)
 *     * G(s+n+1) G(a+n+2) G(b+n+2) / ((s/2)_{n+1} G(s) G(a+1) G(b+1)),
 *
 * s = a + b + 1. Every Barnes-G quotient G(z+n+1)/G(z) is the Gamma product
 * Gamma(z) ... Gamma(z+n), which is how it is evaluated here.
 */
inline AsPrintedReport as_printed_jacobi_det(const FamilySpec& spec, std::size_t n, int digits) {
  spec.validate();
  check_digits(digits);
  if (spec.family != Family::jacobi) throw InvalidFamilySpec("the printed determinant report needs family jacobi");

  AsPrintedReport report;
  report.exact = bareiss_det(moment_matrix(spec, n));

  const Rational s_exact = spec.alpha + spec.beta + 1;
  try {
    std::vector<Rational> symbol(2 * n + 1);
    const Rational up[] = {spec.beta + 1};
    const Rational lo[] = {s_exact};
    for (std::size_t k = 0; k < symbol.size(); ++k) symbol[k] = hyp_terminating(static_cast<long>(k), up, lo, Rational{2});
    report.printed_matrix_det = bareiss_det(ExactMatrix::hankel(n, symbol));
  } catch (const ZeroDenominator&) {
    report.printed_matrix_det.reset();
  }

  if (s_exact == 0) {
    report.note = "printed form undefined: Gamma pole at alpha + beta + 1 = 0";
    return report;
  }

  using boost::math::tgamma;
  const long nn = static_cast<long>(n);
  const Float a = to_float(spec.alpha), b = to_float(spec.beta), s = to_float(s_exact);
  const Float pi = boost::math::constants::pi<Float>();

  Float value = pow(tgamma(s) * pow(Float(2), -(2 * a + 2 * b + nn + 1)) * pi / (tgamma(s) * tgamma(s)), Float(nn + 1));
  value *= to_float(barnes_g_int(nn + 2));
  Float rising{1};
  for (long k = 0; k <= nn; ++k) {
    const Float g1 = tgamma(s / 2 + k), g2 = tgamma((s + 1) / 2 + k);
    value *= tgamma(s + k) * tgamma(a + 1 + k) * tgamma(b + 1 + k) / (g1 * g1 * g2 * g2);
    rising *= s / 2 + k;
  }
  value /= rising;
  report.printed = value;

  const Float exact = to_float(report.exact);
  const Float tolerance = pow(Float(10), -Float(digits) / 2);
  report.agrees = abs(value - exact) / abs(exact) < tolerance;
  report.note = report.agrees ? "printed form matches the exact determinant"
                              : "printed form disagrees with the exact determinant";
  return report;
}

}  // namespace hankel
