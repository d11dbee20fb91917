#include "test_support.hpp"

#include <hankel/families.hpp>
#include <hankel/float_eval.hpp>
#include <hankel/format.hpp>
#include <hankel/oracle.hpp>

#include <gtest/gtest.h>

using namespace hankel;
using hankel::testing::R;

namespace {

using Pairs = std::vector<std::pair<Rational, Rational>>;

const Pairs& jacobi_pairs() {
  static const Pairs pairs{{R(0), R(0)},     {R(1, 2), R(-1, 2)}, {R(2), R(3)},
                           {R(1, 3), R(1, 5)}, {R(-1, 2), R(-1, 2)}, {R(5, 2), R(-4, 5)}};
  return pairs;
}

// P_n^{(a,b)}(0) from the binomial sum
// sum_m C(n+a, n-m) C(n+b, m) ((x-1)/2)^m ((x+1)/2)^{n-m} at x = 0.
Rational jacobi_at_zero(const Rational& a, const Rational& b, long n) {
  Rational sum{0};
  for (long m = 0; m <= n; ++m) {
    const Rational term = pochhammer(a + m + 1, n - m) / factorial(n - m) * pochhammer(b + n - m + 1, m) / factorial(m);
    sum += m % 2 ? -term : term;
  }
  return sum / pow(R(2), static_cast<unsigned>(n));
}

// The printed inverse of ((a+1)_{i+j} / (a+b+2)_{i+j}), evaluated literally.
// Defined only for a + b + 1 != 0.
ExactMatrix printed_shifted_jacobi_inverse(const Rational& a, const Rational& b, long n) {
  const Rational s = a + b + 1;
  ExactMatrix g(static_cast<std::size_t>(n));
  for (long i = 0; i <= n; ++i)
    for (long j = 0; j <= n; ++j) {
      Rational sum{0};
      for (long k = std::max(i, j); k <= n; ++k)
        sum += (2 * k + s) * pochhammer(a + 1, k) / (factorial(k) * pochhammer(s, k) * pochhammer(b + 1, k)) *
               binomial(k, i) * binomial(k, j) * pochhammer(s + i, k) * pochhammer(s + j, k);
      Rational v = pochhammer(s, i) * pochhammer(s, j) / (pochhammer(a + 1, i) * pochhammer(a + 1, j) * s) * sum;
      g(i, j) = (i + j) % 2 ? -v : v;
    }
  return g;
}

// The Jacobi-at-zero inverse sum with its overall 1/(a+b+1) restored,
// evaluated literally with the special values from the binomial sum.
ExactMatrix literal_jacobi_inverse(const Rational& a, const Rational& b, long n) {
  const Rational s = a + b + 1;
  ExactMatrix g(static_cast<std::size_t>(n));
  for (long i = 0; i <= n; ++i)
    for (long j = 0; j <= n; ++j) {
      Rational sum{0};
      for (long k = std::max(i, j); k <= n; ++k)
        sum += factorial(k) * (2 * k + s) * pochhammer(s, k) / (pochhammer(a + 1, k) * pochhammer(b + 1, k)) *
               pochhammer(k + s, i) * jacobi_at_zero(a + i, b + i, k - i) * pochhammer(k + s, j) *
               jacobi_at_zero(a + j, b + j, k - j);
      g(i, j) = sum / (pow(R(-2), static_cast<unsigned>(i + j)) * factorial(i) * factorial(j) * s);
    }
  return g;
}

}  // namespace

TEST(ExplicitDet, Examples) {
  EXPECT_EQ(explicit_det(FamilySpec::hermite(), 2).value, R(1, 4));
  EXPECT_EQ(explicit_det(FamilySpec::laguerre(R(0)), 1).value, 1);
  EXPECT_EQ(explicit_det(FamilySpec::shifted_jacobi(R(0), R(0)), 2).value, R(1, 2160));
  for (const auto& spec : hankel::testing::extended_specs()) EXPECT_EQ(explicit_det(spec, 0).value, 1);
}

TEST(ExplicitDet, FormulaIds) {
  EXPECT_EQ(explicit_det(FamilySpec::hermite(), 1).formula, FormulaId::hermite_det);
  EXPECT_EQ(explicit_det(FamilySpec::laguerre(R(1)), 1).formula, FormulaId::laguerre_det);
  EXPECT_EQ(explicit_det(FamilySpec::gegenbauer(R(1)), 1).formula, FormulaId::gegenbauer_det);
  EXPECT_EQ(explicit_det(FamilySpec::jacobi(R(1), R(1)), 1).formula, FormulaId::jacobi_det);
  EXPECT_EQ(explicit_det(FamilySpec::shifted_jacobi(R(1), R(1)), 1).formula, FormulaId::shifted_jacobi_det);
  EXPECT_EQ(explicit_inverse(FamilySpec::jacobi(R(1), R(1)), 1).formula, FormulaId::jacobi_inverse);
  EXPECT_EQ(formula_name(FormulaId::shifted_jacobi_inverse), "shifted_jacobi_inverse");
  EXPECT_TRUE(explicit_inverse(FamilySpec::hermite(), 1).normalized);
}

TEST(ExplicitDet, MatchesBareissAndNorms) {
  for (const auto& spec : hankel::testing::extended_specs())
    for (std::size_t n = 0; n <= 12; ++n) {
      const Rational d = explicit_det(spec, n).value;
      EXPECT_EQ(d, bareiss_det(moment_matrix(spec, n))) << describe(spec) << " n=" << n;
      EXPECT_EQ(d, det_from_norms(gram_schmidt(spec, n))) << describe(spec) << " n=" << n;
    }
}

TEST(ExplicitDet, HermiteBarnesForm) {
  // 2^{-n(n+1)/2} G(n+2)
  for (long n = 0; n <= 12; ++n)
    EXPECT_EQ(explicit_det(FamilySpec::hermite(), n).value,
              barnes_g_int(n + 2) / pow(R(2), static_cast<unsigned>(n * (n + 1) / 2)));
}

TEST(ExplicitInverse, Examples) {
  ExactMatrix h(2);
  h(0, 0) = R(3, 2), h(0, 2) = -1, h(1, 1) = 2, h(2, 0) = -1, h(2, 2) = 2;
  EXPECT_EQ(explicit_inverse(FamilySpec::hermite(), 2).value, h);
  ExactMatrix l(1);
  l(0, 0) = 2, l(0, 1) = -1, l(1, 0) = -1, l(1, 1) = 1;
  EXPECT_EQ(explicit_inverse(FamilySpec::laguerre(R(0)), 1).value, l);
  ExactMatrix hil(1);
  hil(0, 0) = 4, hil(0, 1) = -6, hil(1, 0) = -6, hil(1, 1) = 12;
  EXPECT_EQ(explicit_inverse(FamilySpec::shifted_jacobi(R(0), R(0)), 1).value, hil);
}

TEST(ExplicitInverse, InvertsAndMatchesOracles) {
  for (const auto& spec : hankel::testing::extended_specs())
    for (std::size_t n : {0u, 1u, 2u, 6u, 12u}) {
      const ExactMatrix m = moment_matrix(spec, n);
      const ExactMatrix inv = explicit_inverse(spec, n).value;
      EXPECT_EQ(inv * m, ExactMatrix::identity(n)) << describe(spec) << " n=" << n;
      EXPECT_EQ(inv, gauss_inverse(m)) << describe(spec) << " n=" << n;
      EXPECT_EQ(inv, kernel_inverse(gram_schmidt(spec, n))) << describe(spec) << " n=" << n;
    }
}

TEST(ExplicitInverse, HilbertInverseIsIntegral) {
  for (std::size_t n = 0; n <= 10; ++n) {
    const ExactMatrix inv = explicit_inverse(FamilySpec::shifted_jacobi(R(0), R(0)), n).value;
    for (const auto& v : inv.entries()) EXPECT_TRUE(is_integer(v)) << "n=" << n << " " << to_string(v);
  }
}

TEST(ExplicitInverse, AgreesWithPrintedShiftedJacobiForm) {
  for (const auto& [a, b] : jacobi_pairs()) {
    if (a + b + 1 == 0) continue;
    for (long n = 0; n <= 8; ++n)
      EXPECT_EQ(explicit_inverse(FamilySpec::shifted_jacobi(a, b), n).value, printed_shifted_jacobi_inverse(a, b, n))
          << to_string(a) << "," << to_string(b) << " n=" << n;
  }
}

TEST(ExplicitInverse, AgreesWithLiteralJacobiSum) {
  for (const auto& [a, b] : jacobi_pairs()) {
    if (a + b + 1 == 0) continue;
    for (long n = 0; n <= 8; ++n)
      EXPECT_EQ(explicit_inverse(FamilySpec::jacobi(a, b), n).value, literal_jacobi_inverse(a, b, n))
          << to_string(a) << "," << to_string(b) << " n=" << n;
  }
}

TEST(ExplicitInverse, JacobiSpecialValuesAtZero) {
  for (const auto& [a, b] : jacobi_pairs())
    for (long shift = 0; shift <= 3; ++shift)
      for (long k = 0; k <= 12; ++k)
        EXPECT_EQ(special_value(FamilySpec::jacobi(a, b), k, shift), jacobi_at_zero(a + shift, b + shift, k));
}

TEST(ExplicitInverse, CheckerboardSignsForPositiveSupport) {
  // Laguerre and shifted Jacobi inverses alternate in sign like (-1)^{i+j}.
  for (const auto& spec : {FamilySpec::laguerre(R(1, 2)), FamilySpec::shifted_jacobi(R(2), R(3))}) {
    const ExactMatrix inv = explicit_inverse(spec, 8).value;
    for (std::size_t i = 0; i <= 8; ++i)
      for (std::size_t j = 0; j <= 8; ++j) EXPECT_EQ(sgn(inv(i, j)), (i + j) % 2 ? -1 : 1) << describe(spec);
  }
}

TEST(ExplicitInverse, RejectsInvalidSpec) {
  EXPECT_THROW(explicit_inverse(FamilySpec::gegenbauer(R(-1, 2)), 2), InvalidFamilySpec);
  EXPECT_THROW(explicit_det(FamilySpec::jacobi(R(-1), R(0)), 2), InvalidFamilySpec);
}

TEST(UnnormalizedScale, Examples) {
  EXPECT_EQ(format_decimal(to_rational(unnormalized_scale(FamilySpec::hermite(), 20)), 20),
            "1.7724538509055160273e+00");
  EXPECT_EQ(format_decimal(to_rational(unnormalized_scale(FamilySpec::laguerre(R(0)), 10)), 10),
            "1.000000000e+00");
  EXPECT_EQ(format_decimal(to_rational(unnormalized_scale(FamilySpec::gegenbauer(R(1, 2)), 10)), 10),
            "2.000000000e+00");
  EXPECT_EQ(format_decimal(to_rational(unnormalized_scale(FamilySpec::jacobi(R(0), R(0)), 10)), 10),
            "2.000000000e+00");
  // 2^3 B(3/2, 5/2) = 8 * (pi/16) = pi/2
  EXPECT_EQ(format_decimal(to_rational(unnormalized_scale(FamilySpec::shifted_jacobi(R(1, 2), R(3, 2)), 30)), 30),
            "1.57079632679489661923132169164e+00");
  EXPECT_THROW(unnormalized_scale(FamilySpec::hermite(), 0), std::invalid_argument);
  EXPECT_THROW(unnormalized_scale(FamilySpec::hermite(), max_float_digits + 1), std::invalid_argument);
}

TEST(AsPrintedJacobiDet, ReportsExactReference) {
  const auto r0 = as_printed_jacobi_det(FamilySpec::jacobi(R(0), R(0)), 0, 30);
  EXPECT_EQ(r0.exact, 1);
  ASSERT_TRUE(r0.printed.has_value());

  const auto r1 = as_printed_jacobi_det(FamilySpec::jacobi(R(0), R(0)), 1, 30);
  EXPECT_EQ(r1.exact, bareiss_det(moment_matrix(FamilySpec::jacobi(R(0), R(0)), 1)));
  EXPECT_EQ(r1.exact, R(1, 3));

  const auto r2 = as_printed_jacobi_det(FamilySpec::jacobi(R(1, 2), R(-1, 2)), 2, 30);
  EXPECT_EQ(r2.exact, bareiss_det(moment_matrix(FamilySpec::jacobi(R(1, 2), R(-1, 2)), 2)));
  ASSERT_TRUE(r2.printed.has_value());
  EXPECT_FALSE(r2.note.empty());
}

TEST(AsPrintedJacobiDet, KnownBehaviour) {
  // The printed form reproduces the Legendre case and misses elsewhere.
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_TRUE(as_printed_jacobi_det(FamilySpec::jacobi(R(0), R(0)), n, 30).agrees);
  EXPECT_FALSE(as_printed_jacobi_det(FamilySpec::jacobi(R(2), R(3)), 2, 30).agrees);

  const auto pole = as_printed_jacobi_det(FamilySpec::jacobi(R(-1, 2), R(-1, 2)), 2, 30);
  EXPECT_FALSE(pole.printed.has_value());
  EXPECT_FALSE(pole.printed_matrix_det.has_value());
  EXPECT_EQ(pole.exact, bareiss_det(moment_matrix(FamilySpec::jacobi(R(-1, 2), R(-1, 2)), 2)));

  EXPECT_THROW(as_printed_jacobi_det(FamilySpec::laguerre(R(0)), 2, 30), InvalidFamilySpec);
}
