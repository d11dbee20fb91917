#pragma once

#include <hankel/families.hpp>
#include <hankel/family.hpp>
#include <hankel/gram.hpp>
#include <hankel/oracle.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hankel {

struct Witness {
  std::optional<std::size_t> row;
  std::optional<std::size_t> col;
  Rational expected;
  Rational actual;
  std::string note;
};

struct Check {
  std::string name;
  bool passed = false;
  std::optional<Witness> witness;  // always set when !passed
};

struct VerifyReport {
  FamilySpec spec;
  std::size_t n = 0;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

inline std::optional<Witness> first_difference(const ExactMatrix& expected, const ExactMatrix& actual) {
  for (std::size_t i = 0; i < expected.rows(); ++i)
    for (std::size_t j = 0; j < expected.rows(); ++j)
      if (expected(i, j) != actual(i, j)) return Witness{i, j, expected(i, j), actual(i, j), {}};
  return std::nullopt;
}

inline Check matrix_check(std::string name, const ExactMatrix& expected, const ExactMatrix& actual) {
  auto w = first_difference(expected, actual);
  return {std::move(name), !w.has_value(), std::move(w)};
}

inline Check scalar_check(std::string name, const Rational& expected, const Rational& actual) {
  if (expected == actual) return {std::move(name), true, std::nullopt};
  return {std::move(name), false, Witness{std::nullopt, std::nullopt, expected, actual, {}}};
}

/// Runs `body`; an exception becomes a failed check carrying its message.
inline Check guarded(const std::string& name, const std::function<Check()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, Witness{std::nullopt, std::nullopt, Rational{0}, Rational{0}, e.what()}};
  }
}

}  // namespace detail

/// Cross-checks explicit formulas, the kernel engine and the elimination
/// oracle for one (spec, n). Mismatches become report entries, never throws
/// on them.
inline VerifyReport verify(const FamilySpec& spec, std::size_t n) {
  spec.validate();
  VerifyReport report{spec, n, {}};

  const ExactMatrix gram = moment_matrix(spec, n);
  std::optional<ExactMatrix> explicit_inv, kernel_inv, gauss_inv;
  std::optional<Rational> explicit_d, norms_d;

  auto add = [&](const std::string& name, const std::function<Check()>& body) {
    report.checks.push_back(detail::guarded(name, body));
  };

  add("explicit_inverse_times_matrix_is_identity", [&] {
    explicit_inv = explicit_inverse(spec, n).value;
    return detail::matrix_check("explicit_inverse_times_matrix_is_identity", ExactMatrix::identity(n),
                                *explicit_inv * gram);
  });
  add("explicit_inverse_equals_kernel_inverse", [&] {
    if (!explicit_inv) explicit_inv = explicit_inverse(spec, n).value;
    kernel_inv = kernel_inverse(gram_schmidt(spec, n));
    return detail::matrix_check("explicit_inverse_equals_kernel_inverse", *kernel_inv, *explicit_inv);
  });
  add("kernel_inverse_equals_gauss_inverse", [&] {
    if (!kernel_inv) kernel_inv = kernel_inverse(gram_schmidt(spec, n));
    gauss_inv = gauss_inverse(gram);
    return detail::matrix_check("kernel_inverse_equals_gauss_inverse", *gauss_inv, *kernel_inv);
  });
  add("explicit_det_equals_det_from_norms", [&] {
    explicit_d = explicit_det(spec, n).value;
    norms_d = det_from_norms(gram_schmidt(spec, n));
    return detail::scalar_check("explicit_det_equals_det_from_norms", *norms_d, *explicit_d);
  });
  add("det_from_norms_equals_bareiss_det", [&] {
    if (!norms_d) norms_d = det_from_norms(gram_schmidt(spec, n));
    return detail::scalar_check("det_from_norms_equals_bareiss_det", bareiss_det(gram), *norms_d);
  });
  add("explicit_inverse_is_symmetric", [&] {
    if (!explicit_inv) explicit_inv = explicit_inverse(spec, n).value;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j)
        if ((*explicit_inv)(i, j) != (*explicit_inv)(j, i))
          return Check{"explicit_inverse_is_symmetric", false,
                       Witness{i, j, (*explicit_inv)(j, i), (*explicit_inv)(i, j), {}}};
    return Check{"explicit_inverse_is_symmetric", true, std::nullopt};
  });
  if (spec.family == Family::hermite || spec.family == Family::gegenbauer) {
    add("odd_positions_vanish", [&] {
      if (!explicit_inv) explicit_inv = explicit_inverse(spec, n).value;
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
          if ((i + j) % 2 == 0) continue;
          if (gram(i, j) != 0)
            return Check{"odd_positions_vanish", false, Witness{i, j, Rational{0}, gram(i, j), "moment matrix"}};
          if ((*explicit_inv)(i, j) != 0)
            return Check{"odd_positions_vanish", false,
                         Witness{i, j, Rational{0}, (*explicit_inv)(i, j), "explicit inverse"}};
        }
      return Check{"odd_positions_vanish", true, std::nullopt};
    });
  }
  return report;
}

}  // namespace hankel
