#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <string>

#include <cliffexp/cliffexp.hpp>

#include "mv_text.hpp"

namespace cliffexp::cli {

namespace {

using nlohmann::json;

constexpr double kConvergenceWarning = 1e-6;

struct Common {
  std::string algebra = "cl30";
  std::string format = "text";
  int digits = 8;
};

struct EvalArgs {
  Common common;
  std::string fn;
  std::string mv;
  int terms = 20;
  bool series = false;
};

struct SpinArgs {
  spin::RampSweep sweep;
  int sigma = -1;
  std::string mode = "adiabatic";
  unsigned threads = 1;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--algebra", c.algebra, "cl30, cl03, cl12 or cl21")
      ->check(CLI::IsMember({"cl30", "cl03", "cl12", "cl21"}, CLI::ignore_case))
      ->capture_default_str();
  cmd->add_option("--format", c.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--digits", c.digits, "significant figures in text output, 0 for shortest exact")
      ->check(CLI::Range(0, 17))
      ->capture_default_str();
}

ExpOptions exp_options_from_env() {
  ExpOptions options;
  if (const char* raw = std::getenv("GA_EPS"); raw != nullptr && *raw != '\0') {
    const std::string_view s(raw);
    double eps = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), eps);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(eps) || eps < 0.0) {
      throw UsageError("GA_EPS must be a non-negative number, got '" + std::string(s) + "'");
    }
    options.degeneracy_eps = eps;
  }
  return options;
}

Signature signature_of(const Common& c) {
  auto sig = parse_signature(c.algebra);
  if (!sig) throw UsageError("unknown algebra '" + c.algebra + "'");
  return *sig;
}

json basis_json() {
  json basis = json::array();
  for (auto name : kBladeNames) basis.push_back(std::string(name));
  return basis;
}

json mv_json(const Multivector& x) {
  json coeffs = json::array();
  for (double v : x.coeffs()) coeffs.push_back(v);
  return json{{"algebra", std::string(signature_name(x.signature()))},
              {"coeffs", coeffs},
              {"basis", basis_json()}};
}

std::string number_text(double v, int digits) {
  return digits > 0 ? text::format_truncated(v, digits) : text::format_shortest(v);
}

bool is_trig(const std::string& fn) {
  return fn == "sin" || fn == "cos" || fn == "tan" || fn == "sec";
}

// Closed-form evaluation of the functions that also have a series.
Multivector closed_form(const std::string& fn, const Multivector& x, const ExpOptions& opt) {
  if (is_trig(fn) && pseudoscalar_square(x.signature()) != -1) {
    throw UsageError(fn + " has no closed form in " + std::string(signature_name(x.signature())) +
                     " (I^2 = +1); use --series");
  }
  if (fn == "exp") return exp(x, opt);
  if (fn == "sin") return trig_exact(x, TrigKind::Sin, opt);
  if (fn == "cos") return trig_exact(x, TrigKind::Cos, opt);
  if (fn == "tan") return ratio_exact(x, RatioKind::Tan, opt);
  if (fn == "sinh") return hyperbolic_exact(x, HyperbolicKind::Sinh, opt);
  if (fn == "cosh") return hyperbolic_exact(x, HyperbolicKind::Cosh, opt);
  if (fn == "tanh") return ratio_exact(x, RatioKind::Tanh, opt);
  if (fn == "sech") return inverse(hyperbolic_exact(x, HyperbolicKind::Cosh, opt)).inverse;
  if (fn == "sec") return inverse(trig_exact(x, TrigKind::Cos, opt)).inverse;
  throw UsageError("function '" + fn + "' has no closed form");
}

SeriesResult series_of(const std::string& fn, const Multivector& x, int terms, std::ostream& err) {
  const auto family = parse_series_family(fn);
  if (!family) throw UsageError("function '" + fn + "' has no series form");
  SeriesResult r = series_eval(x, SeriesSpec{*family, terms});
  if (!(r.last_term_delta <= kConvergenceWarning)) {
    err << "warning: last series term of " << fn << " has magnitude "
        << text::format_shortest(r.last_term_delta) << " (> 1e-06) after " << terms
        << " terms; the series may not have converged\n";
  }
  return r;
}

void print_mv(std::ostream& out, const Multivector& x, const Common& c) {
  if (c.format == "json") {
    out << mv_json(x).dump() << '\n';
  } else {
    out << text::render_terms(x, c.digits) << '\n';
  }
}

void print_scalar(std::ostream& out, const char* key, double v, const Signature sig,
                  const Common& c) {
  if (c.format == "json") {
    out << json{{"algebra", std::string(signature_name(sig))}, {key, v}}.dump() << '\n';
  } else {
    out << number_text(v, c.digits) << '\n';
  }
}

int run_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const Signature sig = signature_of(a.common);
  const ExpOptions opt = exp_options_from_env();
  const Multivector x = text::parse_mv(a.mv, sig);
  const Common& c = a.common;

  if (a.series) {
    print_mv(out, series_of(a.fn, x, a.terms, err).value, c);
    return 0;
  }
  if (a.fn == "inv") {
    print_mv(out, inverse(x).inverse, c);
  } else if (a.fn == "det") {
    print_scalar(out, "value", determinant(x), sig, c);
  } else if (a.fn == "det-norm") {
    print_scalar(out, "value", det_norm(x), sig, c);
  } else if (a.fn == "sqrt-center") {
    // A bare scalar + pseudoscalar is taken as the center element itself;
    // otherwise the center of (a + 𝒜)² is used.
    const bool central_only = x.vector_bivector_part() == Multivector(sig);
    const CenterElement center = central_only
                                     ? CenterElement{x.scalar_part(), x.pseudoscalar_part()}
                                     : center_decompose(x);
    const auto roots = sqrt_center(center, sig);
    if (c.format == "json") {
      json list = json::array();
      for (const auto& r : roots) list.push_back({r.scalar, r.pseudoscalar});
      out << json{{"algebra", std::string(signature_name(sig))},
                  {"center", {center.scalar, center.pseudoscalar}},
                  {"roots", list}}
                 .dump()
          << '\n';
    } else {
      for (const auto& r : roots) {
        out << text::render_terms(Multivector::central(sig, r.scalar, r.pseudoscalar), c.digits)
            << '\n';
      }
    }
  } else if (a.fn == "exp-factors") {
    const ExpFactors f = exp_factors(x, opt);
    if (c.format == "json") {
      out << json{{"algebra", std::string(signature_name(sig))},
                  {"center", {f.center.scalar, f.center.pseudoscalar}},
                  {"a_plus", f.a_plus},
                  {"a_minus", f.a_minus},
                  {"a_plus_sq", f.a_plus_sq},
                  {"a_minus_sq", f.a_minus_sq},
                  {"c_norm", f.c_norm},
                  {"branch", std::string(branch_name(f.branch))}}
                 .dump()
          << '\n';
    } else {
      auto line = [&](const char* name, double v) {
        out << name << number_text(v, c.digits) << '\n';
      };
      line("center_scalar  ", f.center.scalar);
      line("center_pseudo  ", f.center.pseudoscalar);
      line("a_plus         ", f.a_plus);
      line("a_minus        ", f.a_minus);
      line("a_plus_sq      ", f.a_plus_sq);
      line("a_minus_sq     ", f.a_minus_sq);
      if (sig == Signature::Cl30 || sig == Signature::Cl12) line("c_norm         ", f.c_norm);
      out << "branch         " << branch_name(f.branch) << '\n';
    }
  } else {
    print_mv(out, closed_form(a.fn, x, opt), c);
  }
  return 0;
}

int run_compare(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  const Signature sig = signature_of(a.common);
  const ExpOptions opt = exp_options_from_env();
  const Multivector x = text::parse_mv(a.mv, sig);
  const Multivector closed = closed_form(a.fn, x, opt);
  const SeriesResult series = series_of(a.fn, x, a.terms, err);

  std::size_t worst = 0;
  double delta = 0.0;
  for (std::size_t i = 0; i < kBladeCount; ++i) {
    const double d = std::abs(closed[i] - series.value[i]);
    if (d > delta) {
      delta = d;
      worst = i;
    }
  }

  if (a.common.format == "json") {
    json j = mv_json(closed);
    j.erase("coeffs");
    j["fn"] = a.fn;
    j["terms"] = a.terms;
    j["closed"] = mv_json(closed)["coeffs"];
    j["series"] = mv_json(series.value)["coeffs"];
    j["max_delta"] = delta;
    j["max_delta_blade"] = std::string(kBladeNames[worst]);
    j["last_term"] = series.last_term_delta;
    out << j.dump() << '\n';
    return 0;
  }
  const int d = a.common.digits;
  out << "closed     " << text::render_terms(closed, d) << '\n';
  out << "series(" << a.terms << ") " << std::string(a.terms < 10 ? 2 : 1, ' ')
      << text::render_terms(series.value, d) << '\n';
  out << "delta      " << text::render_terms(closed - series.value, d) << '\n';
  out << "max delta  " << text::format_shortest(delta) << " on " << kBladeNames[worst] << '\n';
  return 0;
}

int run_spin(const SpinArgs& a, std::ostream& out) {
  if (a.sigma != 1 && a.sigma != -1) throw UsageError("--sigma must be -1 or 1");
  const spin::SweepMode mode =
      a.mode == "stepping" ? spin::SweepMode::PiecewiseStepping : spin::SweepMode::Adiabatic;
  const spin::ProbabilityTrace trace = spin::sweep_ramp(a.sweep, a.sigma, mode, a.threads);
  if (a.out.empty() || a.out == "-") {
    spin::write_csv(out, trace);
    return 0;
  }
  std::ofstream file(a.out, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + a.out + "' for writing");
  spin::write_csv(file, trace);
  if (!file) throw UsageError("failed writing '" + a.out + "'");
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form multivector exponentials and functions in 3D Clifford algebras"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one function of a multivector");
  add_common(eval_cmd, eval_args.common);
  eval_cmd
      ->add_option("--fn", eval_args.fn,
                   "exp sin cos tan sinh cosh tanh inv det det-norm sqrt-center exp-factors")
      ->required()
      ->check(CLI::IsMember({"exp", "sin", "cos", "tan", "sinh", "cosh", "tanh", "sech", "sec",
                             "inv", "det", "det-norm", "sqrt-center", "exp-factors"}));
  eval_cmd->add_option("--mv", eval_args.mv, "multivector, e.g. \"4,1,3,-5,10,9,-9,-4 / 17\"")
      ->required();
  eval_cmd->add_flag("--series", eval_args.series, "use the truncated Taylor series");
  eval_cmd->add_option("--terms", eval_args.terms, "series degree")
      ->check(CLI::Range(1, kMaxSeriesOrder))
      ->capture_default_str();

  EvalArgs cmp_args;
  auto* cmp_cmd = app.add_subcommand("compare", "closed form against truncated series");
  add_common(cmp_cmd, cmp_args.common);
  cmp_cmd->add_option("--fn", cmp_args.fn, "exp sin cos tan sinh cosh tanh sech sec")
      ->required()
      ->check(CLI::IsMember({"exp", "sin", "cos", "tan", "sinh", "cosh", "tanh", "sech", "sec"}));
  cmp_cmd->add_option("--mv", cmp_args.mv, "multivector")->required();
  cmp_cmd->add_option("--terms", cmp_args.terms, "series degree")
      ->check(CLI::Range(1, kMaxSeriesOrder))
      ->capture_default_str();

  SpinArgs spin_args;
  auto* spin_cmd = app.add_subcommand("spin", "spin-flip probability along a B0 ramp (CSV)");
  spin_cmd->add_option("--omega", spin_args.sweep.omega, "rotation angular frequency")
      ->capture_default_str();
  spin_cmd->add_option("--omega1", spin_args.sweep.omega1, "gamma * B1")->capture_default_str();
  spin_cmd->add_option("--b0-start", spin_args.sweep.b0_start)->capture_default_str();
  spin_cmd->add_option("--b0-end", spin_args.sweep.b0_end)->capture_default_str();
  spin_cmd->add_option("--T", spin_args.sweep.duration, "ramp duration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  spin_cmd->add_option("--sigma", spin_args.sigma, "rotation sense, -1 or 1")
      ->check(CLI::IsMember({-1, 1}))
      ->capture_default_str();
  spin_cmd->add_option("--samples", spin_args.sweep.samples)
      ->check(CLI::Range(2, 100000000))
      ->capture_default_str();
  spin_cmd->add_option("--gamma", spin_args.sweep.gamma, "gyromagnetic ratio")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  spin_cmd->add_option("--mode", spin_args.mode, "adiabatic or stepping")
      ->check(CLI::IsMember({"adiabatic", "stepping"}))
      ->capture_default_str();
  spin_cmd->add_option("--threads", spin_args.threads)->check(CLI::Range(1u, 256u));
  spin_cmd->add_option("--out", spin_args.out, "CSV path, stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (eval_cmd->parsed()) return run_eval(eval_args, out, err);
    if (cmp_cmd->parsed()) return run_compare(cmp_args, out, err);
    if (spin_cmd->parsed()) return run_spin(spin_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace cliffexp::cli
