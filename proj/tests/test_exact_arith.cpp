#include "test_support.hpp"

#include <hankel/format.hpp>
#include <hankel/rational.hpp>

#include <gtest/gtest.h>

using namespace hankel;
using hankel::testing::R;

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(R(5), 0), 1);
  EXPECT_EQ(pochhammer(R(1), 4), 24);
  // (1/2)(3/2)(5/2)
  EXPECT_EQ(pochhammer(R(1, 2), 3), R(15, 8));
}

TEST(Pochhammer, RecurrenceAndFactorial) {
  hankel::testing::RationalGenerator gen(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational a = gen();
    for (long n = 0; n < 12; ++n) EXPECT_EQ(pochhammer(a, n + 1), pochhammer(a, n) * (a + n));
  }
  for (unsigned long n = 0; n <= 30; ++n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    EXPECT_EQ(pochhammer(R(1), static_cast<long>(n)), Rational(f));
  }
}

TEST(Pochhammer, RejectsNegativeLength) { EXPECT_THROW(pochhammer(R(1), -1), std::domain_error); }

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 2), 6);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(5, -1), 0);
}

TEST(BarnesG, Examples) {
  EXPECT_EQ(barnes_g_int(1), 1);
  EXPECT_EQ(barnes_g_int(2), 1);
  EXPECT_EQ(barnes_g_int(4), 2);
  EXPECT_EQ(barnes_g_int(6), 288);  // 0! 1! 2! 3! 4!
}

TEST(BarnesG, FunctionalEquation) {
  for (long n = 0; n < 20; ++n) EXPECT_EQ(barnes_g_int(n + 2), barnes_g_int(n + 1) * factorial(n));
}

TEST(BarnesG, RejectsNonPositive) {
  EXPECT_THROW(barnes_g_int(0), std::domain_error);
  EXPECT_THROW(barnes_g_int(-3), std::domain_error);
}

TEST(HypTerminating, Examples) {
  EXPECT_EQ(hyp_terminating(0, {R(3, 7), R(2)}, {R(-5, 3)}, R(11)), 1);
  EXPECT_EQ(hyp_terminating(1, {R(1)}, {R(1)}, R(2)), -1);
  EXPECT_EQ(hyp_terminating(2, {R(1)}, {R(1)}, R(2)), 1);
}

TEST(HypTerminating, MatchesBruteForceSum) {
  hankel::testing::RationalGenerator gen(11);
  for (int trial = 0; trial < 30; ++trial) {
    const long m = trial % 7;
    const Rational a = gen(), c = gen() + R(1, 3) + 20, z = gen();  // c never a nonpositive integer
    Rational expected{0};
    for (long k = 0; k <= m; ++k)
      expected += pochhammer(R(-m), k) * pochhammer(a, k) / pochhammer(c, k) * pow(z, static_cast<unsigned>(k)) /
                  factorial(k);
    EXPECT_EQ(hyp_terminating(m, {a}, {c}, z), expected);
  }
}

TEST(HypTerminating, ZeroDenominator) {
  EXPECT_THROW(hyp_terminating(3, {R(1)}, {R(-1)}, R(2)), ZeroDenominator);
  EXPECT_THROW(hyp_terminating(3, {R(1)}, {R(0)}, R(2)), ZeroDenominator);
  // -3 only appears from the fourth term on, which m = 3 never reaches
  EXPECT_NO_THROW(hyp_terminating(3, {R(1)}, {R(-3)}, R(2)));
}

TEST(RationalText, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3"), 3);
  EXPECT_EQ(parse_rational("-6/4"), R(-3, 2));
  EXPECT_EQ(parse_rational("+1/2"), R(1, 2));
  EXPECT_EQ(to_string(R(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(R(8, 4)), "2");
  for (const char* bad : {"", "1/", "/2", "1/0", "1.5", " 1", "1/-2", "a", "--1"})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
}

TEST(RationalText, CanonicalAfterOperations) {
  hankel::testing::RationalGenerator gen(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = gen(), b = gen();
    for (const Rational& v : {Rational(a + b), Rational(a * b), Rational(a - b)}) {
      EXPECT_GT(v.get_den(), 0);
      Integer g;
      mpz_gcd(g.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
      EXPECT_EQ(g, 1);
      EXPECT_EQ(parse_rational(to_string(v)), v);
    }
  }
}

TEST(DecimalFormat, RoundsHalfEven) {
  EXPECT_EQ(format_decimal(R(1, 4), 17), "2.5000000000000000e-01");
  EXPECT_EQ(format_decimal(R(0), 5), "0");
  EXPECT_EQ(format_decimal(R(-1, 3), 3), "-3.33e-01");
  EXPECT_EQ(format_decimal(R(125, 100), 2), "1.2e+00");
  EXPECT_EQ(format_decimal(R(135, 100), 2), "1.4e+00");
  EXPECT_EQ(format_decimal(R(9999, 1), 2), "1.0e+04");
  EXPECT_EQ(format_decimal(R(1, 2160), 1), "5e-04");
  EXPECT_EQ(format_decimal(R(123456), 3), "1.23e+05");
}

TEST(DecimalFormat, WithinHalfUlpOfExact) {
  hankel::testing::RationalGenerator gen(5);
  for (int trial = 0; trial < 200; ++trial) {
    Rational v = gen(100000, 99991) * pow10_signed(trial % 21 - 10);
    if (v == 0) continue;
    for (int digits : {1, 5, 17, 40}) {
      const Rational back = parse_decimal(format_decimal(v, digits));
      // |back - v| <= 1/2 unit in the last place <= |v| * 5 * 10^{-digits}
      EXPECT_LE(abs(back - v), abs(v) * 5 * pow10_signed(-digits)) << to_string(v) << " digits " << digits;
    }
  }
}
