#ifndef ZETACERT_QUAD_HPP
#define ZETACERT_QUAD_HPP

#include <functional>

namespace zetacert {

inline constexpr double kQuadTolFloor = 1e-13;
inline constexpr double kQuadTolCeiling = 1e-4;
inline constexpr int kQuadPanelBudget = 10'000;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute; includes the certified tail bound
  int subdivisions = 0;         // Gauss-Kronrod panels evaluated
  double truncation_point = 0.0;  // upper limit T actually used
};

/// integral_0^inf t^{s-1}/(e^t - 1) dt  =  Gamma(s) zeta(s),  s > 1.
///
/// Strategy: an analytic series handles (0, 2^-10] where the integrand
/// behaves like t^{s-2}; adaptive Gauss-Kronrod panels cover [2^-10, T] with
/// bisection grading toward the left endpoint; T starts at max(50, 3s + 40)
/// and grows until the certified tail majorant
///   integral_T^inf t^{s-1} e^{-t} (1 - e^{-T})^{-1} dt
/// (bounded through an upper-incomplete-gamma majorant) drops below tol/2 of
/// the accumulated value. Throws DomainError for s <= 1 or tol outside
/// [kQuadTolFloor, kQuadTolCeiling]; ToleranceNotMet on panel exhaustion.
QuadratureResult integrate_bose_moment(double s, double tol);

/// Same integral scaled by exp(-log_scale); used by the zeta integral route
/// to divide by Gamma(s) without overflow.
QuadratureResult integrate_bose_moment_scaled(double s, double tol,
                                              double log_scale);

/// integral_0^inf F_k(t) t^s dt where F_k is the signed kernel derivative;
/// equals Gamma(s+1) zeta(s+1-k). Requires s > k (the 0-end behaves like
/// k! t^{s-k-1}); the tail uses the certified bound
/// F_k(t) <= (k+1)! 2^{k+1} e^{-t} for t >= 1.
QuadratureResult integrate_kernel_moment(int k, double s, double tol);

/// Generic hook: adaptive Gauss-Kronrod bisection of f over finite [a, b]
/// down to absolute tolerance abs_tol. Deterministic for identical inputs.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int panel_budget = kQuadPanelBudget);

}  // namespace zetacert

#endif
