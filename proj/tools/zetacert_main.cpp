// zetacert command line: evaluate the implemented special functions and run
// the verification scans, with human-readable summaries and JSON/CSV export.
//
// Exit codes: 0 success / all scans pass, 1 at least one scan failed,
// 2 usage error, 3 domain error (the message names the violated
// precondition).

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zetacert/bose_kernel.hpp"
#include "zetacert/combinatorics.hpp"
#include "zetacert/errors.hpp"
#include "zetacert/quad.hpp"
#include "zetacert/report.hpp"
#include "zetacert/specfun.hpp"
#include "zetacert/verify.hpp"

namespace {

using zetacert::GridSample;
using zetacert::GridSpec;
using zetacert::VerificationReport;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct EvalOptions {
  std::string target;
  std::optional<double> x, z, w, t, alpha;
  std::optional<int> k, p, ell;
  std::string route = "alternating";
};

double require_flag(const std::optional<double>& v, const char* flag,
                    const std::string& target) {
  if (!v) throw UsageError("eval " + target + " requires " + flag);
  if (!std::isfinite(*v)) {
    throw UsageError(std::string(flag) + " must be a finite decimal");
  }
  return *v;
}

int require_int_flag(const std::optional<int>& v, const char* flag,
                     const std::string& target) {
  if (!v) throw UsageError("eval " + target + " requires " + flag);
  return *v;
}

zetacert::ZetaRoute parse_route(const std::string& name) {
  if (name == "direct") return zetacert::ZetaRoute::DirectSeries;
  if (name == "odd") return zetacert::ZetaRoute::OddSeries;
  if (name == "alternating") return zetacert::ZetaRoute::AlternatingSeries;
  if (name == "integral") return zetacert::ZetaRoute::IntegralRepresentation;
  throw UsageError("unknown --route '" + name +
                   "' (expected direct|odd|alternating|integral)");
}

int run_eval(const EvalOptions& o) {
  if (o.target == "stirling") {
    const int k = require_int_flag(o.k, "--k", o.target);
    const int p = require_int_flag(o.p, "--p", o.target);
    std::cout << zetacert::stirling2(k, p).str() << "\n";
    return 0;
  }

  double value = 0.0;
  if (o.target == "zeta") {
    value = zetacert::zeta(require_flag(o.x, "--x", o.target), parse_route(o.route));
  } else if (o.target == "gamma") {
    value = zetacert::gamma(require_flag(o.x, "--x", o.target));
  } else if (o.target == "eta") {
    value = zetacert::eta(require_flag(o.x, "--x", o.target));
  } else if (o.target == "lambda") {
    value = zetacert::lambda(require_flag(o.x, "--x", o.target));
  } else if (o.target == "binom") {
    value = zetacert::binom(require_flag(o.z, "--z", o.target),
                            require_flag(o.w, "--w", o.target));
  } else if (o.target == "fk") {
    value = zetacert::kernel_derivative(require_int_flag(o.k, "--k", o.target),
                                        require_flag(o.t, "--t", o.target));
  } else if (o.target == "fratio") {
    value = zetacert::kernel_ratio(require_int_flag(o.k, "--k", o.target),
                                   require_flag(o.t, "--t", o.target));
  } else if (o.target == "t1ratio") {
    value = zetacert::theorem1_ratio(require_flag(o.x, "--x", o.target),
                                     require_flag(o.alpha, "--alpha", o.target),
                                     require_int_flag(o.ell, "--ell", o.target));
  } else {
    throw UsageError("unknown eval target '" + o.target +
                     "' (expected zeta|gamma|eta|lambda|binom|stirling|fk|fratio|t1ratio)");
  }
  std::cout << format_value(value) << "\n";
  return 0;
}

struct VerifyOptions {
  std::string claim;
  std::optional<double> alpha, grid_start, grid_end, slack, tol;
  std::optional<int> ell, k, grid_points;
  bool json = false;
  bool csv = false;
  std::string out;
};

struct ScanOutput {
  VerificationReport report;
  std::vector<GridSample> samples;
};

GridSpec grid_from(const GridSpec& defaults, const VerifyOptions& o) {
  GridSpec g = defaults;
  if (o.grid_start) g.start = *o.grid_start;
  if (o.grid_end) g.end = *o.grid_end;
  if (o.grid_points) g.points = *o.grid_points;
  return g;
}

void run_theorem1(const VerifyOptions& o, std::vector<ScanOutput>& outputs) {
  const GridSpec grid = grid_from(zetacert::kDefaultXGrid, o);
  const double slack = o.slack.value_or(zetacert::kDefaultMonotoneSlack);
  const std::vector<double> alphas =
      o.alpha ? std::vector<double>{*o.alpha} : std::vector<double>{0.5, 1.0, 2.5};
  const std::vector<int> ells =
      o.ell ? std::vector<int>{*o.ell} : std::vector<int>{0, 1, 4};
  for (double alpha : alphas) {
    for (int ell : ells) {
      ScanOutput so;
      so.report = zetacert::scan_theorem1_monotone(alpha, ell, grid, slack, &so.samples);
      outputs.push_back(std::move(so));
    }
  }

  // numeric shadow of the "onto (0, inf)" range claim
  ScanOutput shadow;
  shadow.report.claim_id = "theorem1.onto_shadow";
  shadow.report.parameters["alpha"] = 1.0;
  shadow.report.parameters["ell"] = 0.0;
  const double low = zetacert::theorem1_ratio(1.0001, 1.0, 0);
  const double high = zetacert::theorem1_ratio(40.0, 1.0, 0);
  shadow.report.samples = 2;
  const double low_margin = 1e-3 - low;
  const double high_margin = high - 40.0;
  shadow.report.worst_margin = std::min(low_margin, high_margin);
  shadow.report.worst_point = low_margin <= high_margin ? 1.0001 : 40.0;
  shadow.report.residual_max = std::max(0.0, -shadow.report.worst_margin);
  shadow.report.verdict = shadow.report.worst_margin >= 0.0
                              ? zetacert::Verdict::Pass
                              : zetacert::Verdict::Fail;
  shadow.samples.push_back({1.0001, low, low_margin});
  shadow.samples.push_back({40.0, high, high_margin});
  outputs.push_back(std::move(shadow));
}

void run_logconvex(const VerifyOptions& o, std::vector<ScanOutput>& outputs) {
  const GridSpec grid = grid_from(zetacert::kDefaultConvexityGrid, o);
  const double slack = o.slack.value_or(zetacert::kDefaultConvexitySlack);
  const std::vector<int> ells =
      o.ell ? std::vector<int>{*o.ell} : std::vector<int>{1, 2, 5};
  for (int ell : ells) {
    ScanOutput so;
    so.report = zetacert::scan_log_convexity(ell, grid, zetacert::kDefaultConvexityStep,
                                             slack, &so.samples);
    outputs.push_back(std::move(so));
  }
}

void run_prop1(const VerifyOptions& o, std::vector<ScanOutput>& outputs) {
  const GridSpec grid = grid_from(zetacert::kDefaultTGrid, o);
  const double slack = o.slack.value_or(zetacert::kDefaultMonotoneSlack);
  const std::vector<int> ks =
      o.k ? std::vector<int>{*o.k} : std::vector<int>{0, 1, 2, 3};
  for (int k : ks) {
    ScanOutput so;
    so.report = zetacert::scan_proposition_ratio(k, grid, slack, &so.samples);
    outputs.push_back(std::move(so));
  }
}

void run_simple(const std::vector<VerificationReport>& reports,
                std::vector<ScanOutput>& outputs) {
  for (const auto& r : reports) outputs.push_back({r, {}});
}

std::string render_csv(const std::vector<ScanOutput>& outputs) {
  std::ostringstream os;
  os << "parameter,value,margin\n";
  for (const auto& so : outputs) {
    if (so.samples.empty()) continue;
    os << "# " << so.report.claim_id << "\n";
    for (const auto& s : so.samples) {
      os << format_value(s.parameter) << "," << format_value(s.value) << ","
         << format_value(s.margin) << "\n";
    }
  }
  return os.str();
}

int run_verify(const VerifyOptions& o) {
  const double tol = o.tol.value_or(zetacert::kDefaultIdentityTol);
  std::vector<ScanOutput> outputs;

  if (o.claim == "theorem1") {
    run_theorem1(o, outputs);
  } else if (o.claim == "logconvex") {
    run_logconvex(o, outputs);
  } else if (o.claim == "prop1") {
    run_prop1(o, outputs);
  } else if (o.claim == "lemma1") {
    run_simple(zetacert::scan_monotonicity_rule(tol), outputs);
  } else if (o.claim == "identities") {
    run_simple(zetacert::check_proof_identities(tol), outputs);
  } else if (o.claim == "all") {
    run_theorem1(o, outputs);
    run_logconvex(o, outputs);
    run_prop1(o, outputs);
    run_simple(zetacert::scan_monotonicity_rule(tol), outputs);
    run_simple(zetacert::check_proof_identities(tol), outputs);
    run_simple(zetacert::scan_kernel_positivity(), outputs);
  } else {
    throw UsageError("unknown verify claim '" + o.claim +
                     "' (expected theorem1|logconvex|prop1|lemma1|identities|all)");
  }

  std::vector<VerificationReport> reports;
  reports.reserve(outputs.size());
  for (const auto& so : outputs) reports.push_back(so.report);

  std::string payload;
  if (o.json) {
    payload = zetacert::to_json(reports).dump(2) + "\n";
  } else if (o.csv) {
    payload = render_csv(outputs);
  }

  if (!o.out.empty() && !payload.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw UsageError("cannot open --out path '" + o.out + "'");
    f << payload;
  }

  const bool payload_to_stdout = payload.size() && o.out.empty();
  if (payload_to_stdout) {
    std::cout << payload;
  } else {
    for (const auto& r : reports) std::cout << zetacert::summary_line(r) << "\n";
  }

  for (const auto& r : reports) {
    if (!r.passed()) return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"special-function evaluation and numerical certification of "
               "zeta-ratio monotonicity, log-convexity, and kernel-ratio claims"};
  app.require_subcommand(1);

  EvalOptions eval_opts;
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate one function at a point");
  eval_cmd->add_option("target", eval_opts.target,
                       "zeta|gamma|eta|lambda|binom|stirling|fk|fratio|t1ratio")
      ->required();
  eval_cmd->add_option("--x", eval_opts.x, "argument x");
  eval_cmd->add_option("--z", eval_opts.z, "binomial upper argument");
  eval_cmd->add_option("--w", eval_opts.w, "binomial lower argument");
  eval_cmd->add_option("--t", eval_opts.t, "kernel evaluation point");
  eval_cmd->add_option("--alpha", eval_opts.alpha, "shift alpha > 0");
  eval_cmd->add_option("--k", eval_opts.k, "integer order");
  eval_cmd->add_option("--p", eval_opts.p, "Stirling block count");
  eval_cmd->add_option("--ell", eval_opts.ell, "integer shift ell >= 0");
  eval_cmd->add_option("--route", eval_opts.route,
                       "zeta route: direct|odd|alternating|integral");

  VerifyOptions verify_opts;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification scans");
  CLI::App* report_cmd =
      app.add_subcommand("report", "run verification scans, emit JSON");
  for (CLI::App* cmd : {verify_cmd, report_cmd}) {
    cmd->add_option("claim", verify_opts.claim,
                    "theorem1|logconvex|prop1|lemma1|identities|all")
        ->required();
    cmd->add_option("--alpha", verify_opts.alpha, "override alpha");
    cmd->add_option("--ell", verify_opts.ell, "override ell");
    cmd->add_option("--k", verify_opts.k, "override k");
    cmd->add_option("--grid-start", verify_opts.grid_start, "override grid start");
    cmd->add_option("--grid-end", verify_opts.grid_end, "override grid end");
    cmd->add_option("--grid-points", verify_opts.grid_points, "override grid points");
    cmd->add_option("--slack", verify_opts.slack, "override scan slack");
    cmd->add_option("--tol", verify_opts.tol, "override quadrature/identity tolerance");
    cmd->add_option("--out", verify_opts.out, "write the JSON/CSV payload to this path");
  }
  CLI::Option* json_flag = verify_cmd->add_flag(
      "--json", verify_opts.json, "emit the VerificationReport array as JSON");
  verify_cmd->add_flag("--csv", verify_opts.csv, "emit grid samples as CSV")
      ->excludes(json_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(eval_opts);
    if (report_cmd->parsed()) verify_opts.json = true;
    return run_verify(verify_opts);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const zetacert::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const zetacert::Error& e) {
    std::cerr << "evaluation error: " << e.what() << "\n";
    return 3;
  }
}
