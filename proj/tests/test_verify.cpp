#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "zetacert/errors.hpp"
#include "zetacert/report.hpp"
#include "zetacert/specfun.hpp"
#include "zetacert/verify.hpp"

using namespace zetacert;

namespace {

bool reports_identical(const VerificationReport& a, const VerificationReport& b) {
  return a.claim_id == b.claim_id && a.verdict == b.verdict &&
         a.worst_margin == b.worst_margin && a.worst_point == b.worst_point &&
         a.samples == b.samples && a.residual_max == b.residual_max &&
         a.parameters == b.parameters;
}

}  // namespace

TEST_CASE("grid generation") {
  const GridSpec lin{0.0, 1.0, 5, GridSpacing::Linear};
  const auto xs = lin.abscissae();
  REQUIRE(xs.size() == 5);
  CHECK(xs.front() == 0.0);
  CHECK(xs.back() == 1.0);
  CHECK(xs[2] == doctest::Approx(0.5));

  const GridSpec log{0.01, 100.0, 9, GridSpacing::Logarithmic};
  const auto ys = log.abscissae();
  REQUIRE(ys.size() == 9);
  CHECK(ys.front() == 0.01);
  CHECK(ys.back() == 100.0);
  for (std::size_t i = 1; i < ys.size(); ++i) CHECK(ys[i] > ys[i - 1]);
  CHECK(ys[4] == doctest::Approx(1.0));

  CHECK_THROWS_AS((GridSpec{0.0, 1.0, 1, GridSpacing::Linear}).abscissae(), DomainError);
  CHECK_THROWS_AS((GridSpec{1.0, 1.0, 4, GridSpacing::Linear}).abscissae(), DomainError);
  CHECK_THROWS_AS((GridSpec{0.0, 1.0, 4, GridSpacing::Logarithmic}).abscissae(), DomainError);
  CHECK_THROWS_AS((GridSpec{-1.0, 1.0, 4, GridSpacing::Logarithmic}).abscissae(), DomainError);
}

TEST_CASE("theorem1_ratio spot values and limit shadows") {
  // binom(3,1) zeta(3)/zeta(2), composed from the specfun oracles by hand
  const double want = 3.0 * 1.2020569031595942 / 1.6449340668482264;
  CHECK(std::abs(theorem1_ratio(2.0, 1.0, 0) - want) <= 1e-12 * want);
  CHECK(theorem1_ratio(1.0001, 1.0, 0) < 1e-3);
  CHECK(theorem1_ratio(40.0, 1.0, 0) > 40.0);
  CHECK(theorem1_ratio(10.0, 0.5, 3) > theorem1_ratio(2.0, 0.5, 3));
  CHECK_THROWS_AS(theorem1_ratio(1.0, 1.0, 0), DomainError);
  CHECK_THROWS_AS(theorem1_ratio(2.0, 0.0, 0), DomainError);
  CHECK_THROWS_AS(theorem1_ratio(2.0, 1.0, -1), DomainError);
}

TEST_CASE("theorem 1 monotonicity scans pass at the contract slack") {
  const GridSpec grid{1.01, 40.0, 200, GridSpacing::Logarithmic};
  for (double alpha : {0.5, 1.0, 2.5}) {
    for (int ell : {0, 1, 4}) {
      std::vector<GridSample> samples;
      const VerificationReport r =
          scan_theorem1_monotone(alpha, ell, grid, 1e-12, &samples);
      CAPTURE(alpha);
      CAPTURE(ell);
      CHECK(r.passed());
      CHECK(r.worst_margin > 0.0);
      CHECK(r.samples == 200);
      CHECK(samples.size() == 200);
    }
  }
}

TEST_CASE("reciprocal of the theorem-1 ratio is strictly decreasing (negated control)") {
  const GridSpec grid{1.01, 40.0, 100, GridSpacing::Logarithmic};
  double worst = -1.0;
  double prev = 1.0 / theorem1_ratio(grid.abscissae().front(), 1.0, 0);
  for (std::size_t i = 1; i < grid.abscissae().size(); ++i) {
    const double v = 1.0 / theorem1_ratio(grid.abscissae()[i], 1.0, 0);
    worst = std::max(worst, v - prev);
    prev = v;
  }
  // every adjacent step decreases, so a monotone-increase scan of the
  // reciprocal would report Fail
  CHECK(worst < -1e-12);
}

TEST_CASE("scan failure paths") {
  // impossible demand: slack -1 requires every log-step to exceed 1
  const GridSpec grid{1.01, 40.0, 50, GridSpacing::Logarithmic};
  const VerificationReport r = scan_theorem1_monotone(1.0, 0, grid, -1.0);
  CHECK_FALSE(r.passed());

  // grid outside the admissible region becomes a Fail with diagnostic flag
  const GridSpec bad{0.5, 40.0, 50, GridSpacing::Logarithmic};
  const VerificationReport rb = scan_theorem1_monotone(1.0, 0, bad, 1e-12);
  CHECK_FALSE(rb.passed());
  CHECK(rb.parameters.count("evaluation_error") == 1);
}

TEST_CASE("log-convexity scans pass and the negated control is concave") {
  const GridSpec grid{1.05, 30.0, 100, GridSpacing::Logarithmic};
  for (int ell : {1, 2, 5}) {
    const VerificationReport r =
        scan_log_convexity(ell, grid, kDefaultConvexityStep, 1e-8);
    CAPTURE(ell);
    CHECK(r.passed());
  }
  // control: second differences of -[log Gamma(x+1) + ln zeta(x)] stay below
  // the slack, i.e. the negation is concave
  const double h = kDefaultConvexityStep;
  for (double x : grid.abscissae()) {
    const auto g = [](double u) { return -(log_gamma(u + 1.0) + std::log(zeta(u))); };
    CHECK(g(x + h) - 2.0 * g(x) + g(x - h) <= 1e-8);
  }
  // ell = 0 violates the precondition and is reported as Fail
  CHECK_FALSE(scan_log_convexity(0, grid, h, 1e-8).passed());
}

TEST_CASE("log-convexity rejects grids touching the pole region") {
  const GridSpec bad{1.0005, 30.0, 10, GridSpacing::Logarithmic};
  const VerificationReport r = scan_log_convexity(1, bad, 1e-3, 1e-8);
  CHECK_FALSE(r.passed());
  CHECK(r.parameters.count("evaluation_error") == 1);
}

TEST_CASE("proposition 1 scans: strict decrease, range, and tail") {
  const GridSpec grid{0.01, 30.0, 300, GridSpacing::Logarithmic};
  for (int k : {0, 1, 2, 3}) {
    std::vector<GridSample> samples;
    const VerificationReport r = scan_proposition_ratio(k, grid, 1e-12, &samples);
    CAPTURE(k);
    CHECK(r.passed());
    CHECK(samples.size() == 300);
    CHECK(samples.front().value > samples.back().value);
    CHECK(samples.back().value > 1.0);
  }
}

TEST_CASE("ratio of integrals: constant, increasing, decreasing") {
  const double tol = 1e-9;
  const Integrand u{1, 2.0}, v{1, 1.0};
  // identical integrands give exactly the constant ratio 1
  CHECK(std::abs(ratio_of_integrals(u, u, 3.0, tol) - 1.0) <= 5.0 * tol);
  // U/V = t (increasing) makes R increase; swapped it decreases
  const double r2 = ratio_of_integrals(u, v, 2.0, tol);
  const double r4 = ratio_of_integrals(u, v, 4.0, tol);
  const double r8 = ratio_of_integrals(u, v, 8.0, tol);
  CHECK(r2 < r4);
  CHECK(r4 < r8);
  const double d2 = ratio_of_integrals(v, u, 2.0, tol);
  const double d4 = ratio_of_integrals(v, u, 4.0, tol);
  CHECK(d2 > d4);
}

TEST_CASE("proof identities all pass at tol = 1e-9") {
  const auto reports = check_proof_identities(1e-9);
  REQUIRE(reports.size() == 4);
  for (const auto& r : reports) {
    CAPTURE(r.claim_id);
    CHECK(r.passed());
    CHECK(r.samples > 0);
  }
  CHECK(reports[0].claim_id == "identities.ibp_base");
  CHECK(reports[1].claim_id == "identities.binomial_bridge");
  CHECK(reports[2].claim_id == "identities.ibp_chain");
  CHECK(reports[3].claim_id == "identities.ell_ratio");
}

TEST_CASE("binomial bridge residual is at round-off level in the integer case") {
  // Gamma(4)/Gamma(3) = 3 against Gamma(2) binom(3,1) = 3
  const double lhs = std::exp(log_gamma(4.0) - log_gamma(3.0));
  const double rhs = zetacert::gamma(2.0) * 3.0;
  CHECK(std::abs(lhs - rhs) / rhs <= 1e-14);
}

TEST_CASE("monotonicity rule scans") {
  const auto reports = scan_monotonicity_rule(1e-9);
  REQUIRE(reports.size() == 5);
  for (const auto& r : reports) {
    CAPTURE(r.claim_id);
    CHECK(r.passed());
  }
}

TEST_CASE("kernel positivity and complete-monotonicity spot checks") {
  const auto reports = scan_kernel_positivity();
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) {
    CAPTURE(r.claim_id);
    CHECK(r.passed());
    CHECK(r.worst_margin > 0.0);
  }
}

TEST_CASE("scans are deterministic") {
  const GridSpec grid{1.01, 40.0, 60, GridSpacing::Logarithmic};
  const VerificationReport a = scan_theorem1_monotone(1.0, 1, grid, 1e-12);
  const VerificationReport b = scan_theorem1_monotone(1.0, 1, grid, 1e-12);
  CHECK(reports_identical(a, b));

  const auto ia = check_proof_identities(1e-9);
  const auto ib = check_proof_identities(1e-9);
  REQUIRE(ia.size() == ib.size());
  for (std::size_t i = 0; i < ia.size(); ++i) CHECK(reports_identical(ia[i], ib[i]));
}

TEST_CASE("pass verdicts survive halving the grid spacing") {
  const GridSpec x2{1.01, 40.0, 399, GridSpacing::Logarithmic};
  CHECK(scan_theorem1_monotone(1.0, 0, x2, 1e-12).passed());
  const GridSpec c2{1.05, 30.0, 199, GridSpacing::Logarithmic};
  CHECK(scan_log_convexity(1, c2, kDefaultConvexityStep, 1e-8).passed());
  const GridSpec t2{0.01, 30.0, 599, GridSpacing::Logarithmic};
  CHECK(scan_proposition_ratio(0, t2, 1e-12).passed());
}

TEST_CASE("JSON round-trip reproduces every report field exactly") {
  const GridSpec grid{0.01, 30.0, 50, GridSpacing::Logarithmic};
  std::vector<VerificationReport> reports;
  reports.push_back(scan_proposition_ratio(2, grid, 1e-12));
  reports.push_back(check_proof_identities(1e-9).front());

  const nlohmann::json j = to_json(reports);
  const std::string text = j.dump(2);
  const nlohmann::json parsed = nlohmann::json::parse(text);
  const auto round = reports_from_json(parsed);
  REQUIRE(round.size() == reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CAPTURE(i);
    CHECK(reports_identical(reports[i], round[i]));
  }
  // keys are the field names in lower_snake_case
  CHECK(parsed[0].contains("claim_id"));
  CHECK(parsed[0].contains("verdict"));
  CHECK(parsed[0].contains("worst_margin"));
  CHECK(parsed[0].contains("worst_point"));
  CHECK(parsed[0].contains("samples"));
  CHECK(parsed[0].contains("residual_max"));
  CHECK(parsed[0].contains("parameters"));
}

TEST_CASE("summary line format") {
  VerificationReport r;
  r.claim_id = "prop1.decreasing[k=2]";
  r.verdict = Verdict::Pass;
  r.worst_margin = 0.5;
  r.worst_point = 30.0;
  const std::string line = summary_line(r);
  CHECK(line == "prop1.decreasing[k=2] PASS worst_margin=0.5 at x=30");
}
