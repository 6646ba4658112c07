// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criterion 10 drives the CLI binary named by the ZETACERT_CLI environment
// variable.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "zetacert/bose_kernel.hpp"
#include "zetacert/combinatorics.hpp"
#include "zetacert/errors.hpp"
#include "zetacert/quad.hpp"
#include "zetacert/report.hpp"
#include "zetacert/richardson.hpp"
#include "zetacert/specfun.hpp"
#include "zetacert/verify.hpp"

using namespace zetacert;

namespace {

int failures = 0;
std::vector<std::string> notes;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    notes.push_back(what);
  }
}

void criterion(int number, const std::string& name, const std::function<void()>& body) {
  const int before = failures;
  notes.clear();
  try {
    body();
  } catch (const std::exception& e) {
    ++failures;
    notes.push_back(std::string("exception: ") + e.what());
  }
  const bool ok = failures == before;
  std::printf("criterion %2d %-28s %s\n", number, name.c_str(), ok ? "PASS" : "FAIL");
  if (!ok) {
    for (const auto& n : notes) std::printf("             - %s\n", n.c_str());
  }
  std::fflush(stdout);
}

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("ZETACERT_CLI");
  // fallback for manual runs from the build directory
  const std::string binary = cli ? cli : "tools/zetacert";
  const std::string cmd = binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw Error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

}  // namespace

int main() {
  criterion(1, "zeta correctness", [] {
    const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
    expect(rel_err(zeta(2.0), pi2_6) <= 1e-12, "zeta(2) vs pi^2/6");
    const ZetaRoute routes[] = {ZetaRoute::DirectSeries, ZetaRoute::OddSeries,
                                ZetaRoute::AlternatingSeries};
    for (int i = 0; i < 50; ++i) {
      const double x = 1.1 * std::pow(30.0 / 1.1, i / 49.0);
      const double a = zeta(x, routes[0]);
      const double b = zeta(x, routes[1]);
      const double c = zeta(x, routes[2]);
      const double hi = std::max({a, b, c});
      const double lo = std::min({a, b, c});
      expect(hi - lo <= 1e-12 * hi, "route agreement at x = " + std::to_string(x));
    }
    for (double x : {1.5, 2.0, 3.0, 10.0, 25.0}) {
      expect(rel_err(zeta(x, ZetaRoute::IntegralRepresentation), zeta(x)) <= 1e-8,
             "integral route at x = " + std::to_string(x));
    }
  });

  criterion(2, "lemma 2 identity", [] {
    const auto base = [](double t) { return kernel_base(t); };
    for (int k = 1; k <= 5; ++k) {
      for (double t : {0.5, 1.0, 2.0, 5.0}) {
        const double fd = nth_derivative(base, k, t);
        const double closed = (k % 2 == 0 ? 1.0 : -1.0) * kernel_derivative(k, t);
        expect(std::abs(closed - fd) <= 1e-5 * std::abs(closed),
               "FD agreement k=" + std::to_string(k) + " t=" + std::to_string(t));
      }
    }
    const double ln2 = std::numbers::ln2;
    expect(std::abs(kernel_derivative(1, ln2) - 2.0) <= 1e-13 * 2.0, "F(1, ln 2) = 2");
    expect(std::abs(kernel_derivative(2, ln2) - 6.0) <= 1e-13 * 6.0, "F(2, ln 2) = 6");
  });

  criterion(3, "theorem 1 monotonicity", [] {
    const GridSpec grid{1.01, 40.0, 200, GridSpacing::Logarithmic};
    for (double alpha : {0.5, 1.0, 2.5}) {
      for (int ell : {0, 1, 4}) {
        const VerificationReport r = scan_theorem1_monotone(alpha, ell, grid, 1e-12);
        expect(r.passed(), "scan alpha=" + std::to_string(alpha) +
                               " ell=" + std::to_string(ell));
      }
    }
    expect(theorem1_ratio(1.0001, 1.0, 0) < 1e-3, "shadow at x -> 1+");
    expect(theorem1_ratio(40.0, 1.0, 0) > 40.0, "shadow at x = 40");
  });

  criterion(4, "theorem 1 log-convexity", [] {
    const GridSpec grid{1.05, 30.0, 100, GridSpacing::Logarithmic};
    for (int ell : {1, 2, 5}) {
      const VerificationReport r = scan_log_convexity(ell, grid, 1e-3, 1e-8);
      expect(r.passed(), "scan ell=" + std::to_string(ell));
    }
  });

  criterion(5, "proposition 1", [] {
    const GridSpec grid{0.01, 30.0, 300, GridSpacing::Logarithmic};
    for (int k : {0, 1, 2, 3}) {
      const VerificationReport r = scan_proposition_ratio(k, grid, 1e-12);
      expect(r.passed(), "scan k=" + std::to_string(k));
      expect(std::abs(kernel_ratio(k, 30.0) - 1.0) <= 1e-8,
             "tail limit k=" + std::to_string(k));
    }
    const double r1 = kernel_ratio(1, 0.01);
    expect(r1 >= 150.0 && r1 <= 250.0, "asymptote (k+1)/t at k=1, t=0.01");
  });

  criterion(6, "proof identities", [] {
    const auto reports = check_proof_identities(1e-9);
    expect(reports.size() == 4, "four reports");
    for (const auto& r : reports) expect(r.passed(), r.claim_id);
  });

  criterion(7, "extended binomial", [] {
    expect(rel_err(binom(5, 2), 10.0) <= 1e-13, "binom(5,2)");
    expect(binom(-3, 2) == 6.0, "binom(-3,2)");
    expect(binom(-2, -1) == 0.0, "binom(-2,-1)");
    expect(binom(2.5, -1) == 0.0, "binom(2.5,-1)");
    expect(std::isinf(binom(-1, 0.5)), "binom(-1,0.5) divergent");
    const double z = 7.3;
    for (double w : {1.2, 2.5, 4.9}) {
      const double lhs = binom(z, w);
      expect(std::abs(lhs - (binom(z - 1, w) + binom(z - 1, w - 1))) <= 1e-10 * lhs,
             "pascal at w=" + std::to_string(w));
      expect(std::abs(lhs - binom(z, z - w)) <= 1e-12 * lhs,
             "symmetry at w=" + std::to_string(w));
    }
  });

  criterion(8, "stirling exactness", [] {
    for (int k = 0; k <= 20; ++k) {
      for (int p = 0; p <= k; ++p) {
        expect(stirling2(k, p) == stirling2_explicit_sum(k, p),
               "S(" + std::to_string(k) + "," + std::to_string(p) + ")");
      }
    }
    // Bell numbers via the triangle recurrence
    std::vector<BigInt> bells = {1};
    std::vector<BigInt> row = {1};
    for (int n = 1; n <= 10; ++n) {
      std::vector<BigInt> next = {row.back()};
      for (const BigInt& v : row) next.push_back(next.back() + v);
      bells.push_back(next.front());
      row = std::move(next);
    }
    for (int k = 0; k <= 10; ++k) {
      expect(stirling_table().row_sum(k) == bells[static_cast<std::size_t>(k)],
             "Bell number k=" + std::to_string(k));
    }
  });

  criterion(9, "lemma 4 spot checks", [] {
    const auto base = [](double t) { return kernel_base(t); };
    for (int n = 0; n <= 4; ++n) {
      for (double t : {0.5, 1.0, 3.0}) {
        const double v = n == 0 ? kernel_base(t)
                                : (n % 2 == 0 ? 1.0 : -1.0) * nth_derivative(base, n, t);
        expect(v >= 0.0, "CM order n=" + std::to_string(n) + " t=" + std::to_string(t));
      }
    }
    for (int k = 0; k <= 8; ++k) {
      for (int i = 0; i <= 40; ++i) {
        const double t = 1e-4 * std::pow(60.0 / 1e-4, i / 40.0);
        expect(kernel_derivative(k, t) > 0.0,
               "positivity k=" + std::to_string(k) + " t=" + std::to_string(t));
      }
    }
  });

  criterion(10, "cli contract", [] {
    expect(run_cli("verify all").exit_code == 0, "verify all exits 0");

    const RunResult json_run = run_cli("verify theorem1 --alpha 1 --ell 0 --json");
    expect(json_run.exit_code == 0, "json run exits 0");
    const auto reports = reports_from_json(nlohmann::json::parse(json_run.out));
    expect(to_json(reports).dump(2) + "\n" == json_run.out, "json round-trip");

    const RunResult a = run_cli("verify prop1 --k 1");
    const RunResult b = run_cli("verify prop1 --k 1");
    expect(a.out == b.out && !a.out.empty(), "deterministic stdout");
  });

  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d check(s) failed\n", failures);
  return 1;
}
