#ifndef ZETACERT_VERIFY_HPP
#define ZETACERT_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

namespace zetacert {

enum class GridSpacing { Linear, Logarithmic };

/// Sampling grid for a scan. Generated abscissae are strictly increasing;
/// logarithmic spacing additionally requires start > 0.
struct GridSpec {
  double start = 0.0;
  double end = 0.0;
  int points = 2;
  GridSpacing spacing = GridSpacing::Linear;

  std::vector<double> abscissae() const;
};

enum class Verdict { Pass, Fail };

/// Structured outcome of one theorem/identity scan. verdict is Pass iff
/// worst_margin >= -slack for the claim's stated slack; parameters records
/// the scan configuration (alpha, ell, k, slack, tolerances, grid).
struct VerificationReport {
  std::string claim_id;
  Verdict verdict = Verdict::Fail;
  double worst_margin = 0.0;
  double worst_point = 0.0;
  int samples = 0;
  double residual_max = 0.0;
  std::map<std::string, double> parameters;

  bool passed() const { return verdict == Verdict::Pass; }
};

/// One sampled point of a scan, retained for CSV export.
struct GridSample {
  double parameter = 0.0;
  double value = 0.0;
  double margin = 0.0;
};

// Scan defaults (see README for the error budget behind the slacks).
inline constexpr double kDefaultMonotoneSlack = 1e-12;
inline constexpr double kDefaultConvexitySlack = 1e-8;
inline constexpr double kDefaultConvexityStep = 1e-3;
inline constexpr double kDefaultIdentityTol = 1e-9;
inline const GridSpec kDefaultXGrid{1.01, 40.0, 200, GridSpacing::Logarithmic};
inline const GridSpec kDefaultConvexityGrid{1.05, 30.0, 100,
                                            GridSpacing::Logarithmic};
inline const GridSpec kDefaultTGrid{0.01, 30.0, 300, GridSpacing::Logarithmic};

/// The Theorem-1 function binom(x+alpha+ell, alpha) * zeta(x+alpha)/zeta(x),
/// computed in log space (log_gamma and ln zeta) and exponentiated.
/// Requires x > 1, alpha > 0, ell >= 0.
double theorem1_ratio(double x, double alpha, int ell);

/// Adjacent-pair increase of ln theorem1_ratio over the grid with margin
/// >= -slack. Monotonicity is asserted only at sampled pairs, never between
/// grid points.
VerificationReport scan_theorem1_monotone(double alpha, int ell,
                                          const GridSpec& grid, double slack,
                                          std::vector<GridSample>* samples_out = nullptr);

/// Nonnegative (>= -slack) second central difference, step h, of
/// g(x) = log_gamma(x+ell) + ln zeta(x) at every grid point. Requires the
/// grid to lie within (1 + h, inf) and ell >= 1.
VerificationReport scan_log_convexity(int ell, const GridSpec& grid, double h,
                                      double slack,
                                      std::vector<GridSample>* samples_out = nullptr);

/// Strict decrease of kernel_ratio(k, .) over the grid, every value > 1,
/// and the end value within 1e-8 of 1 when the grid ends at >= 30.
VerificationReport scan_proposition_ratio(int k, const GridSpec& grid,
                                          double slack,
                                          std::vector<GridSample>* samples_out = nullptr);

/// Integrand selector for the ratio-of-integrals rule: F_k(t) * t^power.
/// (The k = 1 member with power offsets covers e^t/(e^t-1)^2 * t^c.)
struct Integrand {
  int k = 0;
  double power = 0.0;
};

/// R(x) = integral W(t,x) U(t) dt / integral W(t,x) V(t) dt with W = t^x,
/// U and V drawn from the kernel-moment family above.
double ratio_of_integrals(const Integrand& u, const Integrand& v, double x,
                          double tol);

/// The proof-chain identities, one report each:
///  (a) ibp_base:  Gamma(x+a+1)/Gamma(x+1) * zeta(x+a)/zeta(x)
///                 = integral F_1 t^{x+a} / integral F_1 t^x
///  (b) binomial_bridge:  Gamma(x+a+1)/Gamma(x+1) = Gamma(a+1) binom(x+a, a)
///  (c) ibp_chain:  integral F_{k+1} t^{s+1} = (s+1) integral F_k t^s
///  (d) ell_ratio:  Gamma(x+a+l)/Gamma(x+l) * zeta(x+a)/zeta(x)
///                 = integral F_l t^{x+a+l-1} / integral F_l t^{x+l-1}, l = 2
std::vector<VerificationReport> check_proof_identities(double tol);

/// Ratio-of-integrals rule instantiations: hypotheses (monotone U/V) checked
/// by grid scan, then the conclusion (R increasing / decreasing / constant)
/// on sampled x.
std::vector<VerificationReport> scan_monotonicity_rule(double tol);

/// Finite-order complete-monotonicity and positivity spot checks of the
/// kernel: (-1)^n FD^n[1/(e^t-1)](t) >= 0 for n <= 4 at t in {0.5, 1, 3}
/// (Richardson finite differences), and kernel_derivative(k,t) > 0 for
/// k <= 8 on a log grid in (1e-4, 60).
std::vector<VerificationReport> scan_kernel_positivity();

}  // namespace zetacert

#endif
