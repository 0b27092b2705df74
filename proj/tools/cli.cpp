#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include "figures.hpp"
#include "frechet/distributions.hpp"
#include "frechet/errors.hpp"
#include "frechet/ftransform.hpp"
#include "frechet/laplace.hpp"
#include "selfcheck.hpp"

namespace frechet::cli {

namespace {

constexpr const char* kProfileEnv = "FRECHET_LAPLACE_PROFILE";

struct Options {
  // laplace
  long l = 0;
  long k = 0;
  double p = 0.0;
  std::string method = "auto";
  // figure
  std::string figure;
  std::string output;
  int points = 400;
  // moment / transform
  std::string dist;
  std::string kind;
  double gamma = 0.0;
  double alpha = 0.0;
  double mu = 0.0;
  double x = 0.0;
  double t = 0.0;
  // selfcheck
  std::string profile;
  bool list = false;
};

void print_result(std::ostream& out, std::string_view method, const EvalResult<double>& r) {
  out << "method: " << method << '\n'
      << "value: " << format_real(r.value) << '\n'
      << "err_estimate: " << format_real(r.err_estimate) << '\n'
      << "converged: " << (r.converged ? "true" : "false") << '\n';
}

int cmd_laplace(const Options& o, std::ostream& out) {
  const RationalShape shape(o.l, o.k);
  if (!(o.p > 0.0) || !std::isfinite(o.p)) {
    throw DomainError("p must be positive (the transform is defined for Re p > 0)");
  }
  if (o.method == "both") {
    const auto m = laplace_frechet({shape, o.p, LaplaceMethod::MeijerG});
    const auto q = laplace_frechet({shape, o.p, LaplaceMethod::Quadrature});
    print_result(out, "meijerg", m);
    print_result(out, "quadrature", q);
    out << "relative_difference: "
        << format_real(std::abs(m.value - q.value) / std::max(1.0, std::abs(q.value)))
        << '\n';
    return m.converged && q.converged ? kOk : kNotConverged;
  }
  LaplaceMethod method = parse_laplace_method(o.method);
  if (method == LaplaceMethod::Auto) {
    method = o.p >= kSmallLaplaceArgument ? LaplaceMethod::MeijerG : LaplaceMethod::Quadrature;
  }
  const auto r = laplace_frechet({shape, o.p, method});
  print_result(out, to_string(method), r);
  return r.converged ? kOk : kNotConverged;
}

int cmd_figure(const Options& o, std::ostream& out, std::ostream& err) {
  const auto id = parse_figure_id(o.figure);
  if (!id) throw DomainError("unknown figure '" + o.figure + "' (fig1..fig4)");
  if (o.points < 2) throw DomainError("--points must be at least 2");
  const auto data = make_figure(*id, o.points);
  std::ofstream file(o.output, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << o.output << "' for writing\n";
    return kIoError;
  }
  write_csv(file, data);
  file.close();
  if (!file) {
    err << "error: failed writing '" << o.output << "'\n";
    return kIoError;
  }
  out << "wrote " << data.rows.size() << " rows to " << o.output << '\n';
  return kOk;
}

int cmd_moment(const Options& o, std::ostream& out) {
  if (o.dist == "frechet") {
    out << format_real(frechet_moment(Shape(o.gamma), o.mu)) << '\n';
  } else if (o.dist == "levy") {
    out << format_real(levy_moment(LevyIndex(o.alpha), o.mu)) << '\n';
  } else {
    throw DomainError("unknown distribution '" + o.dist + "' (frechet, levy)");
  }
  return kOk;
}

int cmd_transform(const Options& o, std::ostream& out) {
  if (o.kind == "levy") {
    out << format_real(frechet_transform_levy(LevyIndex(o.alpha), Shape(o.gamma), o.x)) << '\n';
    return kOk;
  }
  if (o.kind == "kernel") {
    out << format_real(frechet_kernel({Shape(o.gamma), o.x, o.t})) << '\n';
    return kOk;
  }
  if (o.kind == "frechet-half") {
    const auto r = frechet_transform_frechet_half(Shape(o.gamma), o.x);
    print_result(out, "meijerg", r);
    return r.converged ? kOk : kNotConverged;
  }
  throw DomainError("unknown transform '" + o.kind + "' (levy, kernel, frechet-half)");
}

int cmd_selfcheck(const Options& o, std::ostream& out) {
  if (o.list) {
    for (const auto& c : selfcheck_suite()) out << c.name << '\n';
    return kOk;
  }
  std::string name = o.profile;
  if (name.empty()) {
    const char* env = std::getenv(kProfileEnv);
    name = env && *env ? env : "default";
  }
  const auto profile = find_profile(name);
  if (!profile) throw DomainError("unknown profile '" + name + "' (default, strict)");
  return run_selfcheck(*profile, out) ? kOk : kNotConverged;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplace transform of the Frechet distribution via Meijer G functions"};
  app.require_subcommand(1);
  Options o;

  auto* laplace = app.add_subcommand("laplace", "L[Fr(l/k, x); p]");
  laplace->add_option("--l", o.l, "numerator of the shape gamma = l/k")->required();
  laplace->add_option("--k", o.k, "denominator of the shape gamma = l/k")->required();
  laplace->add_option("--p", o.p, "transform variable, p > 0")->required();
  laplace->add_option("--method", o.method, "meijer | quadrature | auto | both")
      ->capture_default_str();

  auto* figure = app.add_subcommand(
      "figure",
      "write figure data as CSV. fig1: p in [0.01,10] linear, k=4, l=1..4; "
      "fig2: p in [0.01,100] log, k=1, l=1..3; fig3: x in [1e-12,10] log, "
      "transform of Fr(1/2) at gamma=1/3; fig4: x in (0,3], reduced Levy "
      "asymptotic vs Frechet for gamma=1 and 1/3");
  figure->add_option("--id", o.figure, "fig1 | fig2 | fig3 | fig4")->required();
  figure->add_option("--output", o.output, "CSV path")->required();
  figure->add_option("--points", o.points, "grid points (>= 2)")->capture_default_str();

  auto* moment = app.add_subcommand("moment", "power moment \\int x^mu pdf(x) dx");
  moment->add_option("dist", o.dist, "frechet | levy")->required();
  moment->add_option("--gamma", o.gamma, "Frechet shape");
  moment->add_option("--alpha", o.alpha, "Levy index");
  moment->add_option("--mu", o.mu, "moment order")->required();

  auto* transform = app.add_subcommand("transform", "Frechet integral transform");
  transform->add_option("kind", o.kind, "levy | kernel | frechet-half")->required();
  transform->add_option("--gamma", o.gamma, "kernel shape")->required();
  transform->add_option("--alpha", o.alpha, "Levy index (levy)");
  transform->add_option("--x", o.x, "evaluation point")->required();
  transform->add_option("--t", o.t, "kernel second variable (kernel)");

  auto* selfcheck = app.add_subcommand(
      "selfcheck", "run the invariant suite; profile from FRECHET_LAPLACE_PROFILE if unset");
  selfcheck->add_option("--profile", o.profile, "default | strict");
  selfcheck->add_flag("--list", o.list, "list check names without running");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    if (laplace->parsed()) return cmd_laplace(o, out);
    if (figure->parsed()) return cmd_figure(o, out, err);
    if (moment->parsed()) return cmd_moment(o, out);
    if (transform->parsed()) return cmd_transform(o, out);
    if (selfcheck->parsed()) return cmd_selfcheck(o, out);
  } catch (const DivergentMoment& e) {
    err << "error: " << e.what() << '\n'
        << "valid range: " << (o.dist == "levy" ? "-inf < mu < alpha" : "-inf < mu < gamma")
        << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kNotConverged;
  }
  return kUsage;
}

}  // namespace frechet::cli
