#include "zetacert/verify.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "zetacert/bose_kernel.hpp"
#include "zetacert/combinatorics.hpp"
#include "zetacert/errors.hpp"
#include "zetacert/quad.hpp"
#include "zetacert/richardson.hpp"
#include "zetacert/specfun.hpp"

namespace zetacert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

void grid_parameters(VerificationReport& r, const GridSpec& g) {
  r.parameters["grid_start"] = g.start;
  r.parameters["grid_end"] = g.end;
  r.parameters["grid_points"] = g.points;
}

VerificationReport evaluation_failure(std::string claim_id, const Error& e) {
  VerificationReport r;
  r.claim_id = std::move(claim_id);
  r.verdict = Verdict::Fail;
  r.worst_margin = -kInf;
  r.residual_max = kInf;
  r.parameters["evaluation_error"] = 1.0;
  (void)e;
  return r;
}

double log_theorem1_ratio(double x, double alpha, int ell) {
  const double log_binom = log_gamma(x + alpha + ell + 1.0) -
                           log_gamma(alpha + 1.0) - log_gamma(x + ell + 1.0);
  return log_binom + std::log(zeta(x + alpha)) - std::log(zeta(x));
}

}  // namespace

std::vector<double> GridSpec::abscissae() const {
  if (points < 2) throw DomainError("GridSpec requires points >= 2");
  if (!(start < end)) throw DomainError("GridSpec requires start < end");
  if (spacing == GridSpacing::Logarithmic && !(start > 0.0)) {
    throw DomainError("logarithmic GridSpec requires start > 0");
  }
  std::vector<double> xs(static_cast<std::size_t>(points));
  const int n = points - 1;
  if (spacing == GridSpacing::Linear) {
    for (int i = 1; i < n; ++i) {
      xs[static_cast<std::size_t>(i)] = start + (end - start) * i / n;
    }
  } else {
    const double ls = std::log(start), le = std::log(end);
    for (int i = 1; i < n; ++i) {
      xs[static_cast<std::size_t>(i)] = std::exp(ls + (le - ls) * i / n);
    }
  }
  xs.front() = start;
  xs.back() = end;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw DomainError("GridSpec produced non-increasing abscissae");
  }
  return xs;
}

double theorem1_ratio(double x, double alpha, int ell) {
  if (!(x > 1.0)) throw DomainError("theorem1_ratio requires x > 1");
  if (!(alpha > 0.0)) throw DomainError("theorem1_ratio requires alpha > 0");
  if (ell < 0) throw DomainError("theorem1_ratio requires ell >= 0");
  return std::exp(log_theorem1_ratio(x, alpha, ell));
}

VerificationReport scan_theorem1_monotone(double alpha, int ell,
                                          const GridSpec& grid, double slack,
                                          std::vector<GridSample>* samples_out) {
  VerificationReport r;
  r.claim_id = "theorem1.increasing[alpha=" + fmt(alpha) + ",ell=" + std::to_string(ell) + "]";
  r.parameters["alpha"] = alpha;
  r.parameters["ell"] = ell;
  r.parameters["slack"] = slack;
  grid_parameters(r, grid);
  try {
    if (!(alpha > 0.0)) throw DomainError("theorem1 scan requires alpha > 0");
    if (ell < 0) throw DomainError("theorem1 scan requires ell >= 0");
    if (!(grid.start > 1.0)) throw DomainError("theorem1 scan grid must lie in (1, inf)");
    const std::vector<double> xs = grid.abscissae();
    std::vector<double> logs(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      logs[i] = log_theorem1_ratio(xs[i], alpha, ell);
    }
    r.samples = static_cast<int>(xs.size());
    r.worst_margin = kInf;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      const double margin = logs[i + 1] - logs[i];
      if (margin < r.worst_margin) {
        r.worst_margin = margin;
        r.worst_point = xs[i];
      }
      if (samples_out) {
        samples_out->push_back({xs[i], std::exp(logs[i]), margin});
      }
    }
    if (samples_out) samples_out->push_back({xs.back(), std::exp(logs.back()), 0.0});
    r.residual_max = std::max(0.0, -r.worst_margin);
    r.verdict = r.worst_margin >= -slack ? Verdict::Pass : Verdict::Fail;
  } catch (const Error& e) {
    return evaluation_failure(r.claim_id, e);
  }
  return r;
}

VerificationReport scan_log_convexity(int ell, const GridSpec& grid, double h,
                                      double slack,
                                      std::vector<GridSample>* samples_out) {
  VerificationReport r;
  r.claim_id = "logconvex[ell=" + std::to_string(ell) + "]";
  r.parameters["ell"] = ell;
  r.parameters["h"] = h;
  r.parameters["slack"] = slack;
  grid_parameters(r, grid);
  try {
    if (ell < 1) throw DomainError("scan_log_convexity requires ell >= 1");
    if (!(h > 0.0)) throw DomainError("scan_log_convexity requires h > 0");
    if (!(grid.start - h > 1.0)) {
      throw DomainError("scan_log_convexity grid must lie within (1 + h, inf)");
    }
    const auto g = [ell](double x) { return log_gamma(x + ell) + std::log(zeta(x)); };
    const std::vector<double> xs = grid.abscissae();
    r.samples = static_cast<int>(xs.size());
    r.worst_margin = kInf;
    for (double x : xs) {
      const double d2 = g(x + h) - 2.0 * g(x) + g(x - h);
      if (d2 < r.worst_margin) {
        r.worst_margin = d2;
        r.worst_point = x;
      }
      if (samples_out) samples_out->push_back({x, d2, d2});
    }
    r.residual_max = std::max(0.0, -r.worst_margin);
    r.verdict = r.worst_margin >= -slack ? Verdict::Pass : Verdict::Fail;
  } catch (const Error& e) {
    return evaluation_failure(r.claim_id, e);
  }
  return r;
}

VerificationReport scan_proposition_ratio(int k, const GridSpec& grid,
                                          double slack,
                                          std::vector<GridSample>* samples_out) {
  constexpr double kEndTolerance = 1e-8;
  VerificationReport r;
  r.claim_id = "prop1.decreasing[k=" + std::to_string(k) + "]";
  r.parameters["k"] = k;
  r.parameters["slack"] = slack;
  r.parameters["end_tolerance"] = kEndTolerance;
  grid_parameters(r, grid);
  try {
    const std::vector<double> ts = grid.abscissae();
    std::vector<double> vs(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) vs[i] = kernel_ratio(k, ts[i]);
    r.samples = static_cast<int>(ts.size());
    r.worst_margin = kInf;
    auto consider = [&](double margin, double at) {
      if (margin < r.worst_margin) {
        r.worst_margin = margin;
        r.worst_point = at;
      }
    };
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      const double margin = vs[i] - vs[i + 1];  // strict decrease
      consider(margin, ts[i]);
      if (samples_out) samples_out->push_back({ts[i], vs[i], margin});
    }
    if (samples_out) samples_out->push_back({ts.back(), vs.back(), 0.0});
    for (std::size_t i = 0; i < ts.size(); ++i) {
      consider(vs[i] - 1.0, ts[i]);  // range: every value > 1
    }
    if (grid.end >= 30.0) {
      consider(kEndTolerance - std::abs(vs.back() - 1.0), ts.back());
    }
    r.residual_max = std::max(0.0, -r.worst_margin);
    r.verdict = r.worst_margin >= -slack ? Verdict::Pass : Verdict::Fail;
  } catch (const Error& e) {
    return evaluation_failure(r.claim_id, e);
  }
  return r;
}

double ratio_of_integrals(const Integrand& u, const Integrand& v, double x,
                          double tol) {
  const QuadratureResult num = integrate_kernel_moment(u.k, u.power + x, tol);
  const QuadratureResult den = integrate_kernel_moment(v.k, v.power + x, tol);
  return num.value / den.value;
}

namespace {

struct ResidualAccumulator {
  VerificationReport report;
  double allowed;

  ResidualAccumulator(std::string claim_id, double allowed_residual)
      : allowed(allowed_residual) {
    report.claim_id = std::move(claim_id);
    report.worst_margin = kInf;
    report.residual_max = 0.0;
    report.parameters["allowed_residual"] = allowed_residual;
  }

  void add(double lhs, double rhs, double at) {
    const double denom = std::max(std::abs(lhs), std::abs(rhs));
    const double residual = denom > 0.0 ? std::abs(lhs - rhs) / denom : 0.0;
    ++report.samples;
    if (residual > report.residual_max) report.residual_max = residual;
    const double margin = allowed - residual;
    if (margin < report.worst_margin) {
      report.worst_margin = margin;
      report.worst_point = at;
    }
  }

  VerificationReport finish() {
    report.verdict = report.worst_margin >= 0.0 ? Verdict::Pass : Verdict::Fail;
    return report;
  }
};

constexpr double kIdentityPoints[3][2] = {{2.0, 1.0}, {3.0, 0.5}, {5.0, 2.0}};

}  // namespace

std::vector<VerificationReport> check_proof_identities(double tol) {
  std::vector<VerificationReport> out;

  // (a) the base integration-by-parts identity
  {
    ResidualAccumulator acc("identities.ibp_base", 5.0 * tol);
    acc.report.parameters["tol"] = tol;
    try {
      for (const auto& [x, a] : kIdentityPoints) {
        const double lhs = std::exp(log_gamma(x + a + 1.0) - log_gamma(x + 1.0)) *
                           zeta(x + a) / zeta(x);
        const double rhs = integrate_kernel_moment(1, x + a, tol).value /
                           integrate_kernel_moment(1, x, tol).value;
        acc.add(lhs, rhs, x);
      }
      out.push_back(acc.finish());
    } catch (const Error& e) {
      out.push_back(evaluation_failure("identities.ibp_base", e));
    }
  }

  // (b) gamma-ratio / binomial bridge, fixed 1e-11 allowance
  {
    ResidualAccumulator acc("identities.binomial_bridge", 1e-11);
    try {
      for (double x : {2.0, 3.0, 5.0, 10.0, 19.5}) {
        for (double a : {0.5, 1.0, 2.5}) {
          const double lhs = std::exp(log_gamma(x + a + 1.0) - log_gamma(x + 1.0));
          const double rhs = gamma(a + 1.0) * binom(x + a, a);
          acc.add(lhs, rhs, x);
        }
      }
      out.push_back(acc.finish());
    } catch (const Error& e) {
      out.push_back(evaluation_failure("identities.binomial_bridge", e));
    }
  }

  // (c) the IBP moment chain, boundary terms vanishing
  {
    ResidualAccumulator acc("identities.ibp_chain", 5.0 * tol);
    acc.report.parameters["tol"] = tol;
    try {
      for (int k : {0, 1, 2}) {
        for (double s : {3.0, 4.5, 6.0}) {
          const double lhs = integrate_kernel_moment(k + 1, s + 1.0, tol).value;
          const double rhs = (s + 1.0) * integrate_kernel_moment(k, s, tol).value;
          acc.add(lhs, rhs, s);
        }
      }
      out.push_back(acc.finish());
    } catch (const Error& e) {
      out.push_back(evaluation_failure("identities.ibp_chain", e));
    }
  }

  // (d) the general-ell ratio form at ell = 2
  {
    constexpr int ell = 2;
    ResidualAccumulator acc("identities.ell_ratio", 5.0 * tol);
    acc.report.parameters["tol"] = tol;
    acc.report.parameters["ell"] = ell;
    try {
      for (const auto& [x, a] : kIdentityPoints) {
        const double lhs = std::exp(log_gamma(x + a + ell) - log_gamma(x + ell)) *
                           zeta(x + a) / zeta(x);
        const double rhs =
            integrate_kernel_moment(ell, x + a + ell - 1.0, tol).value /
            integrate_kernel_moment(ell, x + ell - 1.0, tol).value;
        acc.add(lhs, rhs, x);
      }
      out.push_back(acc.finish());
    } catch (const Error& e) {
      out.push_back(evaluation_failure("identities.ell_ratio", e));
    }
  }

  return out;
}

std::vector<VerificationReport> scan_monotonicity_rule(double tol) {
  std::vector<VerificationReport> out;
  const GridSpec tgrid{0.01, 30.0, 20, GridSpacing::Logarithmic};
  const std::vector<double> xs = {2.0, 4.0, 8.0};

  // hypotheses: U/V = t^alpha and dW/dx / W = ln t are increasing in t
  {
    VerificationReport r;
    r.claim_id = "lemma1.hypothesis_uv_increasing";
    r.parameters["alpha"] = 1.0;
    grid_parameters(r, tgrid);
    const auto uv = [](double t) {
      return kernel_derivative(1, t) * t * t / (kernel_derivative(1, t) * t);
    };
    const std::vector<double> ts = tgrid.abscissae();
    r.samples = static_cast<int>(ts.size());
    r.worst_margin = kInf;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      const double margin = uv(ts[i + 1]) - uv(ts[i]);
      if (margin < r.worst_margin) {
        r.worst_margin = margin;
        r.worst_point = ts[i];
      }
    }
    r.residual_max = std::max(0.0, -r.worst_margin);
    r.verdict = r.worst_margin >= 0.0 ? Verdict::Pass : Verdict::Fail;
    out.push_back(r);
  }
  {
    VerificationReport r;
    r.claim_id = "lemma1.hypothesis_w_logderiv_increasing";
    grid_parameters(r, tgrid);
    const std::vector<double> ts = tgrid.abscissae();
    r.samples = static_cast<int>(ts.size());
    r.worst_margin = kInf;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      const double margin = std::log(ts[i + 1]) - std::log(ts[i]);
      if (margin < r.worst_margin) {
        r.worst_margin = margin;
        r.worst_point = ts[i];
      }
    }
    r.residual_max = std::max(0.0, -r.worst_margin);
    r.verdict = r.worst_margin >= 0.0 ? Verdict::Pass : Verdict::Fail;
    out.push_back(r);
  }

  // case (1): U/V = t^alpha increasing => R increasing on sampled x
  {
    VerificationReport r;
    r.claim_id = "lemma1.case1_increasing";
    r.parameters["tol"] = tol;
    try {
      const Integrand u{1, 2.0};  // F_1(t) t^{alpha+1}, alpha = 1
      const Integrand v{1, 1.0};  // F_1(t) t
      std::vector<double> ratios;
      for (double x : xs) ratios.push_back(ratio_of_integrals(u, v, x, tol));
      r.samples = static_cast<int>(xs.size());
      r.worst_margin = kInf;
      for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double margin = ratios[i + 1] - ratios[i];
        if (margin < r.worst_margin) {
          r.worst_margin = margin;
          r.worst_point = xs[i];
        }
      }
      r.residual_max = std::max(0.0, -r.worst_margin);
      r.verdict = r.worst_margin >= 0.0 ? Verdict::Pass : Verdict::Fail;
      out.push_back(r);
    } catch (const Error& e) {
      out.push_back(evaluation_failure(r.claim_id, e));
    }
  }

  // case (2): U/V = t^{-1} decreasing => R decreasing on sampled x
  {
    VerificationReport r;
    r.claim_id = "lemma1.case2_decreasing";
    r.parameters["tol"] = tol;
    try {
      const Integrand u{1, 1.0};
      const Integrand v{1, 2.0};
      std::vector<double> ratios;
      for (double x : xs) ratios.push_back(ratio_of_integrals(u, v, x, tol));
      r.samples = static_cast<int>(xs.size());
      r.worst_margin = kInf;
      for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const double margin = ratios[i] - ratios[i + 1];
        if (margin < r.worst_margin) {
          r.worst_margin = margin;
          r.worst_point = xs[i];
        }
      }
      r.residual_max = std::max(0.0, -r.worst_margin);
      r.verdict = r.worst_margin >= 0.0 ? Verdict::Pass : Verdict::Fail;
      out.push_back(r);
    } catch (const Error& e) {
      out.push_back(evaluation_failure(r.claim_id, e));
    }
  }

  // U = V: the ratio is identically 1
  {
    ResidualAccumulator acc("lemma1.identity_uv_equal", 5.0 * tol);
    acc.report.parameters["tol"] = tol;
    try {
      const Integrand u{1, 1.0};
      for (double x : xs) acc.add(ratio_of_integrals(u, u, x, tol), 1.0, x);
      out.push_back(acc.finish());
    } catch (const Error& e) {
      out.push_back(evaluation_failure("lemma1.identity_uv_equal", e));
    }
  }

  return out;
}

std::vector<VerificationReport> scan_kernel_positivity() {
  std::vector<VerificationReport> out;

  // Lemma 4 shadow: (-1)^n FD^n[1/(e^t-1)](t) >= 0 at finite orders
  {
    VerificationReport r;
    r.claim_id = "lemma4.cm_spot";
    r.parameters["max_order"] = 4;
    r.worst_margin = kInf;
    const auto f = [](double t) { return kernel_base(t); };
    for (int n = 0; n <= 4; ++n) {
      for (double t : {0.5, 1.0, 3.0}) {
        const double signed_fd =
            n == 0 ? kernel_base(t)
                   : (n % 2 == 0 ? 1.0 : -1.0) * nth_derivative(f, n, t);
        ++r.samples;
        if (signed_fd < r.worst_margin) {
          r.worst_margin = signed_fd;
          r.worst_point = t;
        }
      }
    }
    r.residual_max = std::max(0.0, -r.worst_margin);
    r.verdict = r.worst_margin >= 0.0 ? Verdict::Pass : Verdict::Fail;
    out.push_back(r);
  }

  // Lemma 3 shadow: the closed-form derivatives are strictly positive
  {
    VerificationReport r;
    r.claim_id = "lemma3.positivity";
    r.parameters["max_order"] = 8;
    r.worst_margin = kInf;
    const GridSpec tgrid{1e-4, 60.0, 40, GridSpacing::Logarithmic};
    grid_parameters(r, tgrid);
    for (int k = 0; k <= 8; ++k) {
      for (double t : tgrid.abscissae()) {
        const double v = kernel_derivative(k, t);
        ++r.samples;
        if (v < r.worst_margin) {
          r.worst_margin = v;
          r.worst_point = t;
        }
      }
    }
    r.residual_max = std::max(0.0, -r.worst_margin);
    r.verdict = r.worst_margin > 0.0 ? Verdict::Pass : Verdict::Fail;
    out.push_back(r);
  }

  return out;
}

}  // namespace zetacert
