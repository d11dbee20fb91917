#pragma once

// Exact scalar arithmetic and the special-function building blocks used by
// every exact path: shifted factorials, binomials, terminating
// hypergeometric sums and Barnes G at positive integers.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hankel {

/// Arbitrary-precision rational. GMP keeps it canonical: positive
/// denominator, gcd(|num|, den) = 1.
using Rational = mpq_class;
using Integer = mpz_class;

/// A lower hypergeometric parameter hit a nonpositive integer inside the sum.
class ZeroDenominator : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Malformed "p/q" text.
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p" or "p/q" (optional leading sign, no whitespace, q != 0).
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false))
    throw ParseError("malformed rational '" + std::string(text) + "' (expected p or p/q)");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("malformed rational '" + std::string(text) + "' (zero denominator)");
  Rational r{Integer(n, 10), d};
  r.canonicalize();
  return r;
}

/// "p/q", with "/q" omitted when q = 1.
inline std::string to_string(const Rational& q) { return q.get_str(10); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational r{1};
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

/// Shifted factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, long n) {
  if (n < 0) throw std::domain_error("pochhammer: negative length is not supported");
  Rational r{1};
  for (long j = 0; j < n; ++j) r *= a + j;
  return r;
}

inline Rational factorial(long n) { return pochhammer(Rational{1}, n); }

/// C(n, k), zero outside 0 <= k <= n.
inline Rational binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
  if (k < 0 || k > n) return Rational{0};
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational{r};
}

/// Barnes G at a positive integer: G(n) = 0! 1! ... (n-2)!.
inline Rational barnes_g_int(long n) {
  if (n <= 0) throw std::domain_error("barnes_g_int: argument must be a positive integer");
  Rational r{1};
  Rational fact{1};
  for (long i = 1; i <= n - 2; ++i) {
    fact *= i;
    r *= fact;
  }
  return r;
}

/// Terminating series  sum_{k=0}^{m} (-m)_k prod(upper)_k / prod(lower)_k z^k / k!.
///
/// The leading numerator parameter -m is implicit. Terms are built by the
/// ratio of consecutive terms so each step costs O(#params).
inline Rational hyp_terminating(long m, std::span<const Rational> upper, std::span<const Rational> lower,
                                const Rational& z) {
  if (m < 0) throw std::domain_error("hyp_terminating: m must be nonnegative");
  for (const auto& c : lower)
    if (is_integer(c) && c <= 0 && c > -m)
      throw ZeroDenominator("hyp_terminating: lower parameter " + to_string(c) + " vanishes inside the sum");
  Rational sum{0};
  Rational term{1};
  for (long k = 0; k <= m; ++k) {
    sum += term;
    if (k == m) break;
    term *= Rational(k - m) * z / (k + 1);
    for (const auto& a : upper) term *= a + k;
    for (const auto& c : lower) term /= c + k;
  }
  return sum;
}

inline Rational hyp_terminating(long m, std::initializer_list<Rational> upper, std::initializer_list<Rational> lower,
                                const Rational& z) {
  return hyp_terminating(m, std::span<const Rational>(upper.begin(), upper.size()),
                         std::span<const Rational>(lower.begin(), lower.size()), z);
}

}  // namespace hankel
