#pragma once

#include <hankel/rational.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hankel {

enum class Family {
  hermite,
  laguerre,
  gegenbauer,
  jacobi,          // Jacobi weight, Taylor data at x = 0
  shifted_jacobi,  // Jacobi weight, basis powers of (1 - x)/2, Taylor data at x = 1
};

class InvalidFamilySpec : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A classical family plus its parameters. Parameters a family does not use
/// are held at zero and never read.
struct FamilySpec {
  Family family = Family::hermite;
  Rational alpha{0};
  Rational beta{0};
  Rational lambda{0};

  static FamilySpec hermite() { return {Family::hermite, 0, 0, 0}; }
  static FamilySpec laguerre(Rational a) { return {Family::laguerre, std::move(a), 0, 0}; }
  static FamilySpec gegenbauer(Rational l) { return {Family::gegenbauer, 0, 0, std::move(l)}; }
  static FamilySpec jacobi(Rational a, Rational b) { return {Family::jacobi, std::move(a), std::move(b), 0}; }
  static FamilySpec shifted_jacobi(Rational a, Rational b) {
    return {Family::shifted_jacobi, std::move(a), std::move(b), 0};
  }

  bool uses_alpha() const { return family == Family::laguerre || uses_beta(); }
  bool uses_beta() const { return family == Family::jacobi || family == Family::shifted_jacobi; }
  bool uses_lambda() const { return family == Family::gegenbauer; }

  /// Throws InvalidFamilySpec naming the violated constraint.
  void validate() const {
    if (uses_alpha() && alpha <= -1) throw InvalidFamilySpec("alpha must be > -1");
    if (uses_beta() && beta <= -1) throw InvalidFamilySpec("beta must be > -1");
    if (uses_lambda() && (lambda <= Rational(-1, 2) || lambda == 0))
      throw InvalidFamilySpec("lambda must be > -1/2 and nonzero");
  }

  /// Same family with every parameter raised by `shift`, as in the
  /// derivative formulas (alpha -> alpha + i, lambda -> lambda + i).
  FamilySpec shifted_by(long shift) const {
    FamilySpec s = *this;
    if (uses_alpha()) s.alpha += shift;
    if (uses_beta()) s.beta += shift;
    if (uses_lambda()) s.lambda += shift;
    return s;
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::hermite: return "hermite";
    case Family::laguerre: return "laguerre";
    case Family::gegenbauer: return "gegenbauer";
    case Family::jacobi: return "jacobi";
    case Family::shifted_jacobi: return "jacobi-shifted";
  }
  return "?";
}

inline Family parse_family(std::string_view name) {
  for (Family f : {Family::hermite, Family::laguerre, Family::gegenbauer, Family::jacobi, Family::shifted_jacobi})
    if (family_name(f) == name) return f;
  throw InvalidFamilySpec("unknown family '" + std::string(name) +
                          "' (expected hermite, laguerre, gegenbauer, jacobi or jacobi-shifted)");
}

inline std::string describe(const FamilySpec& spec) {
  std::string out(family_name(spec.family));
  if (spec.uses_alpha()) out += " alpha=" + to_string(spec.alpha);
  if (spec.uses_beta()) out += " beta=" + to_string(spec.beta);
  if (spec.uses_lambda()) out += " lambda=" + to_string(spec.lambda);
  return out;
}

}  // namespace hankel
