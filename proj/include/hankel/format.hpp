#pragma once

// Text forms of exact values: correctly rounded decimal strings and the
// reverse exact parse of a decimal literal.

#include <hankel/rational.hpp>

#include <cstdio>
#include <string>
#include <string_view>

namespace hankel {

inline Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

inline Rational pow10_signed(long e) {
  return e >= 0 ? Rational{pow10(static_cast<unsigned long>(e))} : Rational{Integer(1), pow10(static_cast<unsigned long>(-e))};
}

/// `digits` significant digits, round-half-even, scientific notation
/// ("-1.2500e-03"). Zero prints as "0".
inline std::string format_decimal(const Rational& q, int digits) {
  if (digits < 1) throw std::invalid_argument("format_decimal: digits must be positive");
  if (q == 0) return "0";
  const Rational a = abs(q);

  // Decimal exponent e with 10^e <= a < 10^{e+1}; start from the digit counts.
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  while (a >= pow10_signed(e + 1)) ++e;
  while (a < pow10_signed(e)) --e;

  const Rational scaled = a * pow10_signed(digits - 1 - e);
  Integer whole = scaled.get_num() / scaled.get_den();
  const Rational rest = scaled - Rational(whole);
  if (rest > Rational(1, 2) || (rest == Rational(1, 2) && mpz_odd_p(whole.get_mpz_t()))) ++whole;
  if (whole == pow10(static_cast<unsigned long>(digits))) {
    whole = pow10(static_cast<unsigned long>(digits - 1));
    ++e;
  }

  const std::string d = whole.get_str();
  std::string out = q < 0 ? "-" : "";
  out += d[0];
  if (digits > 1) {
    out += '.';
    out += d.substr(1);
  }
  char exp[32];
  std::snprintf(exp, sizeof exp, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
  return out + exp;
}

/// Exact value of a decimal literal such as "-1.25e-3".
inline Rational parse_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  std::string mantissa;
  long scale = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      mantissa += c;
      any_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw ParseError("malformed decimal '" + std::string(text) + "'");
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw ParseError("malformed decimal '" + std::string(text) + "'");
    const std::string_view exponent = text.substr(i + 1);
    try {
      std::size_t used = 0;
      scale += std::stol(std::string(exponent), &used);
      if (used != exponent.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("malformed decimal '" + std::string(text) + "'");
    }
  }
  Rational v = Rational(Integer(mantissa, 10)) * pow10_signed(scale);
  return negative ? -v : v;
}

}  // namespace hankel
