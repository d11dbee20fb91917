#pragma once

// Command-line front end: argument parsing into a CliRequest, validation,
// and serialization of results as pretty text, CSV or JSON.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <hankel/families.hpp>
#include <hankel/family.hpp>
#include <hankel/float_eval.hpp>
#include <hankel/format.hpp>
#include <hankel/gram.hpp>
#include <hankel/oracle.hpp>
#include <hankel/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hankel::cli {

enum class Command { gen, det, inv, kernel, verify, errata };
enum class Method { explicit_formula, kernel, oracle };
enum class OutputFormat { pretty, json, csv };

inline constexpr int exit_ok = 0;
inline constexpr int exit_verify_failed = 1;
inline constexpr int exit_usage = 2;

struct CliRequest {
  Command command = Command::gen;
  std::string family;
  long n = 0;
  std::optional<std::string> alpha, beta, lambda;
  Method method = Method::explicit_formula;
  OutputFormat output = OutputFormat::pretty;
  bool float_mode = false;
  int digits = 17;
  bool unnormalized = false;
  std::optional<std::string> x, y;
};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by parse_args for --help; carries the help text.
struct HelpRequested {
  std::string text;
};

inline std::string_view command_name(Command c) {
  switch (c) {
    case Command::gen: return "gen";
    case Command::det: return "det";
    case Command::inv: return "inv";
    case Command::kernel: return "kernel";
    case Command::verify: return "verify";
    case Command::errata: return "errata";
  }
  return "?";
}

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::explicit_formula: return "explicit";
    case Method::kernel: return "kernel";
    case Method::oracle: return "oracle";
  }
  return "?";
}

inline CliRequest parse_args(int argc, const char* const* argv) {
  CLI::App app{"Exact moment matrices of classical orthogonal polynomials: determinants, inverses, kernels",
               "hankel"};
  app.require_subcommand(1);

  CliRequest req;
  std::string method = "explicit", output = "pretty";
  const std::map<std::string, Command> commands = {
      {"gen", Command::gen},       {"det", Command::det},       {"inv", Command::inv},
      {"kernel", Command::kernel}, {"verify", Command::verify}, {"errata", Command::errata}};
  const std::map<std::string, std::string> help = {
      {"gen", "print the normalized moment matrix"},
      {"det", "print its determinant"},
      {"inv", "print its inverse"},
      {"kernel", "evaluate the reproducing kernel k_n(x, y)"},
      {"verify", "cross-check closed forms, kernel engine and elimination oracle"},
      {"errata", "compare the printed Jacobi determinant formula with the exact value"}};

  std::vector<CLI::App*> subs;
  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--family", req.family, "hermite | laguerre | gegenbauer | jacobi | jacobi-shifted")->required();
    sub->add_option("--n", req.n, "largest index; the matrix is (n+1) x (n+1)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--alpha", req.alpha, "rational p or p/q");
    sub->add_option("--beta", req.beta, "rational p or p/q");
    sub->add_option("--lambda", req.lambda, "rational p or p/q");
    sub->add_option("--method", method, "explicit | kernel | oracle")
        ->check(CLI::IsMember({"explicit", "kernel", "oracle"}));
    sub->add_option("--output", output, "pretty | json | csv")->check(CLI::IsMember({"pretty", "json", "csv"}));
    sub->add_flag("--float", req.float_mode, "print decimals instead of exact rationals");
    sub->add_option("--digits", req.digits, "significant digits in float mode")
        ->check(CLI::Range(1, max_float_digits));
    sub->add_flag("--unnormalized", req.unnormalized, "scale by the raw weight's total mass (needs --float)");
    sub->add_option("--x", req.x, "kernel argument x");
    sub->add_option("--y", req.y, "kernel argument y");
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    // help() delegates to the selected subcommand, if any
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (auto* sub : subs)
    if (sub->parsed()) req.command = commands.at(sub->get_name());
  req.method = method == "kernel" ? Method::kernel : method == "oracle" ? Method::oracle : Method::explicit_formula;
  req.output = output == "json" ? OutputFormat::json : output == "csv" ? OutputFormat::csv : OutputFormat::pretty;
  return req;
}

/// Family and parameters from the request; throws UsageError naming the
/// violated constraint.
inline FamilySpec resolve_spec(const CliRequest& req) {
  FamilySpec spec;
  try {
    spec.family = parse_family(req.family);
    auto param = [&](const std::optional<std::string>& text, const char* name) {
      if (!text) throw UsageError(std::string(name) + " is required for family " + req.family);
      return parse_rational(*text);
    };
    if (spec.uses_alpha()) spec.alpha = param(req.alpha, "alpha");
    if (spec.uses_beta()) spec.beta = param(req.beta, "beta");
    if (spec.uses_lambda()) spec.lambda = param(req.lambda, "lambda");
    spec.validate();
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

inline void validate_request(const CliRequest& req) {
  if (req.n < 0) throw UsageError("n must be nonnegative");
  if (req.unnormalized && !req.float_mode) throw UsageError("--unnormalized requires --float");
  if (req.command == Command::kernel && (!req.x || !req.y)) throw UsageError("kernel requires --x and --y");
  if (req.digits < 1 || req.digits > max_float_digits)
    throw UsageError("digits must be between 1 and " + std::to_string(max_float_digits));
}

namespace detail {

inline std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

/// Renders one exact value, as "p/q" or as a decimal scaled by `factor`.
struct ValueFormatter {
  bool float_mode = false;
  int digits = 17;
  Rational factor{1};

  std::string text(const Rational& v) const { return float_mode ? format_decimal(v * factor, digits) : to_string(v); }
  std::string json(const Rational& v) const { return float_mode ? text(v) : quote(text(v)); }
};

inline std::string params_json(const FamilySpec& spec) {
  std::vector<std::string> fields;
  if (spec.uses_alpha()) fields.push_back("\"alpha\":" + quote(to_string(spec.alpha)));
  if (spec.uses_beta()) fields.push_back("\"beta\":" + quote(to_string(spec.beta)));
  if (spec.uses_lambda()) fields.push_back("\"lambda\":" + quote(to_string(spec.lambda)));
  std::string out = "{";
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + fields[i];
  return out + "}";
}

inline std::string header_json(const CliRequest& req, const FamilySpec& spec) {
  return "\"family\":" + quote(std::string(family_name(spec.family))) + ",\"n\":" + std::to_string(req.n) +
         ",\"params\":" + params_json(spec) + ",\"method\":" + quote(std::string(method_name(req.method))) +
         ",\"normalized\":" + (req.unnormalized ? "false" : "true");
}

inline std::string matrix_json(const ExactMatrix& m, const ValueFormatter& fmt) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.rows(); ++j) out += (j ? "," : "") + fmt.json(m(i, j));
    out += "]";
  }
  return out + "]";
}

inline void write_matrix(std::ostream& out, const ExactMatrix& m, const ValueFormatter& fmt, OutputFormat format) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.rows()));
  std::size_t width = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) {
      cells[i][j] = fmt.text(m(i, j));
      width = std::max(width, cells[i][j].size());
    }
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (format == OutputFormat::csv) {
        out << (j ? "," : "") << row[j];
      } else {
        out << (j ? "  " : "") << std::string(width - row[j].size(), ' ') << row[j];
      }
    }
    out << '\n';
  }
}

inline ExactMatrix inverse_by(Method method, const FamilySpec& spec, std::size_t n) {
  switch (method) {
    case Method::explicit_formula: return explicit_inverse(spec, n).value;
    case Method::kernel: return kernel_inverse(gram_schmidt(spec, n));
    case Method::oracle: return gauss_inverse(moment_matrix(spec, n));
  }
  throw std::logic_error("unknown method");
}

inline Rational det_by(Method method, const FamilySpec& spec, std::size_t n) {
  switch (method) {
    case Method::explicit_formula: return explicit_det(spec, n).value;
    case Method::kernel: return det_from_norms(gram_schmidt(spec, n));
    case Method::oracle: return bareiss_det(moment_matrix(spec, n));
  }
  throw std::logic_error("unknown method");
}

/// k_n(x, y) either from the orthogonal table or as the bilinear form
/// sum_{j,k} B(j, k) w_j(y) w_k(x) of an inverse Gram matrix B.
inline Rational kernel_by(Method method, const FamilySpec& spec, std::size_t n, const Rational& x,
                          const Rational& y) {
  if (method == Method::kernel) return kernel_eval(gram_schmidt(spec, n), x, y);
  const ExactMatrix b = inverse_by(method, spec, n);
  const Basis basis = basis_of(spec);
  Rational sum{0};
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t k = 0; k <= n; ++k)
      sum += b(j, k) * basis.element(static_cast<long>(j), y) * basis.element(static_cast<long>(k), x);
  return sum;
}

inline void write_scalar(std::ostream& out, const CliRequest& req, const FamilySpec& spec, const Rational& value,
                         const ValueFormatter& fmt, const std::string& extra_json = {}) {
  switch (req.output) {
    case OutputFormat::json:
      out << "{" << header_json(req, spec) << ",\"result\":" << fmt.json(value) << extra_json << "}\n";
      break;
    case OutputFormat::csv:
    case OutputFormat::pretty:
      out << fmt.text(value) << '\n';
      break;
  }
}

inline int write_verify(std::ostream& out, const CliRequest& req, const VerifyReport& report) {
  auto position = [](const Witness& w) {
    return w.row ? "(" + std::to_string(*w.row) + "," + std::to_string(*w.col) + ")" : std::string{};
  };
  switch (req.output) {
    case OutputFormat::json: {
      out << "{\"family\":" << quote(std::string(family_name(report.spec.family))) << ",\"n\":" << report.n
          << ",\"params\":" << params_json(report.spec) << ",\"passed\":" << (report.passed() ? "true" : "false")
          << ",\"checks\":[";
      for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const auto& c = report.checks[i];
        out << (i ? "," : "") << "{\"name\":" << quote(c.name) << ",\"passed\":" << (c.passed ? "true" : "false");
        if (c.witness) {
          const auto& w = *c.witness;
          out << ",\"witness\":{";
          if (w.row) out << "\"row\":" << *w.row << ",\"col\":" << *w.col << ",";
          out << "\"expected\":" << quote(to_string(w.expected)) << ",\"actual\":" << quote(to_string(w.actual))
              << ",\"note\":" << quote(w.note) << "}";
        }
        out << "}";
      }
      out << "]}\n";
      break;
    }
    case OutputFormat::csv:
      out << "check,status,row,col,expected,actual,note\n";
      for (const auto& c : report.checks) {
        out << c.name << ',' << (c.passed ? "pass" : "fail");
        if (c.witness) {
          const auto& w = *c.witness;
          out << ',' << (w.row ? std::to_string(*w.row) : "") << ',' << (w.col ? std::to_string(*w.col) : "")
              << ',' << to_string(w.expected) << ',' << to_string(w.actual) << ',' << quote(w.note);
        } else {
          out << ",,,,,";
        }
        out << '\n';
      }
      break;
    case OutputFormat::pretty:
      out << describe(report.spec) << " n=" << report.n << '\n';
      for (const auto& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (c.witness) {
          const auto& w = *c.witness;
          out << " " << position(w) << " expected " << to_string(w.expected) << " got " << to_string(w.actual);
          if (!w.note.empty()) out << " [" << w.note << "]";
        }
        out << '\n';
      }
      out << (report.passed() ? "verified" : "FAILED") << '\n';
      break;
  }
  return report.passed() ? exit_ok : exit_verify_failed;
}

inline void write_errata(std::ostream& out, const CliRequest& req, const FamilySpec& spec,
                         const AsPrintedReport& r) {
  const std::string printed = r.printed ? format_decimal(to_rational(*r.printed), req.digits) : "undefined";
  const std::string exact_dec = format_decimal(r.exact, req.digits);
  const std::string printed_matrix = r.printed_matrix_det ? to_string(*r.printed_matrix_det) : "undefined";
  const std::string verdict = !r.printed ? "undefined" : r.agrees ? "match" : "mismatch";
  switch (req.output) {
    case OutputFormat::json:
      out << "{\"family\":" << quote(std::string(family_name(spec.family))) << ",\"n\":" << req.n
          << ",\"params\":" << params_json(spec) << ",\"digits\":" << req.digits
          << ",\"printed\":" << (r.printed ? printed : "null") << ",\"exact\":" << quote(to_string(r.exact))
          << ",\"exact_decimal\":" << exact_dec << ",\"printed_matrix_det\":"
          << (r.printed_matrix_det ? quote(printed_matrix) : "null") << ",\"verdict\":" << quote(verdict)
          << ",\"note\":" << quote(r.note) << "}\n";
      break;
    case OutputFormat::csv:
      out << "printed," << printed << "\nexact," << to_string(r.exact) << "\nexact_decimal," << exact_dec
          << "\nprinted_matrix_det," << printed_matrix << "\nverdict," << verdict << '\n';
      break;
    case OutputFormat::pretty:
      out << describe(spec) << " n=" << req.n << '\n'
          << "printed closed form:       " << printed << '\n'
          << "exact determinant:         " << to_string(r.exact) << " = " << exact_dec << '\n'
          << "det with printed entries:  " << printed_matrix << '\n'
          << "verdict:                   " << verdict << " (" << r.note << ")\n";
      break;
  }
}

}  // namespace detail

/// Executes a parsed request. Usage problems found here (bad parameters,
/// malformed rationals) are reported on `err` with exit code 2.
inline int run(const CliRequest& req, std::ostream& out, std::ostream& err) {
  try {
    validate_request(req);
    const FamilySpec spec = resolve_spec(req);
    const auto n = static_cast<std::size_t>(req.n);

    detail::ValueFormatter fmt{req.float_mode, req.digits, Rational{1}};
    auto scale_power = [&](long power) {
      if (!req.unnormalized) return;
      const Rational mass = to_rational(unnormalized_scale(spec, req.digits));
      fmt.factor = power >= 0 ? pow(mass, static_cast<unsigned>(power)) : 1 / pow(mass, static_cast<unsigned>(-power));
    };

    switch (req.command) {
      case Command::gen:
      case Command::inv: {
        const bool gen = req.command == Command::gen;
        scale_power(gen ? 1 : -1);
        const ExactMatrix m = gen ? moment_matrix(spec, n) : detail::inverse_by(req.method, spec, n);
        if (req.output == OutputFormat::json)
          out << "{" << detail::header_json(req, spec) << ",\"result\":" << detail::matrix_json(m, fmt) << "}\n";
        else
          detail::write_matrix(out, m, fmt, req.output);
        return exit_ok;
      }
      case Command::det: {
        scale_power(req.n + 1);
        const Rational d = detail::det_by(req.method, spec, n);
        detail::write_scalar(out, req, spec, d, fmt, ",\"det\":" + fmt.json(d));
        return exit_ok;
      }
      case Command::kernel: {
        scale_power(-1);
        const Rational x = parse_rational(*req.x), y = parse_rational(*req.y);
        const Rational k = detail::kernel_by(req.method, spec, n, x, y);
        detail::write_scalar(out, req, spec, k, fmt,
                             ",\"x\":" + detail::quote(to_string(x)) + ",\"y\":" + detail::quote(to_string(y)));
        return exit_ok;
      }
      case Command::verify:
        return detail::write_verify(out, req, verify(spec, n));
      case Command::errata: {
        if (spec.family != Family::jacobi) throw UsageError("errata requires --family jacobi");
        detail::write_errata(out, req, spec, as_printed_jacobi_det(spec, n, req.digits));
        return exit_ok;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const InvalidFamilySpec& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

/// Parse + run, mapping every outcome onto exit codes 0, 1 or 2.
inline int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliRequest req;
  try {
    req = parse_args(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.text;
    return exit_ok;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return run(req, out, err);
}

}  // namespace hankel::cli
