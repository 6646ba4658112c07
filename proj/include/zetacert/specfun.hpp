#ifndef ZETACERT_SPECFUN_HPP
#define ZETACERT_SPECFUN_HPP

#include <cstdint>

namespace zetacert {

/// Largest x for which gamma(x) is representable in double precision.
inline constexpr double kGammaOverflowThreshold = 171.62437695630272;

/// Hard cap on the number of terms any series evaluation may consume.
/// Exceeding it raises ConvergenceError, never silent truncation.
inline constexpr std::int64_t kSeriesTermBudget = 1'000'000;

/// Evaluation routes for the Riemann zeta function. The three series routes
/// are the three equivalent series expansions valid for x > 1; the integral
/// route evaluates (1/Gamma(x)) * integral_0^inf t^{x-1}/(e^t-1) dt by
/// adaptive quadrature.
enum class ZetaRoute {
  DirectSeries,       // sum_k k^{-x}
  OddSeries,          // (1 - 2^{-x})^{-1} sum_k (2k-1)^{-x}
  AlternatingSeries,  // (1 - 2^{1-x})^{-1} sum_k (-1)^{k-1} k^{-x}
  IntegralRepresentation,
};

/// Euler gamma function on the reals.
/// Throws PoleError at x in {0, -1, -2, ...}; returns +inf (overflow
/// sentinel) for x above the representable threshold. Negative non-integer
/// arguments go through the reflection formula.
double gamma(double x);

/// ln Gamma(x) for x > 0 (Lanczos approximation). Throws DomainError for
/// x <= 0.
double log_gamma(double x);

/// ln|Gamma(x)| together with the sign of Gamma(x), valid for any non-pole
/// real x. Used wherever gamma ratios of possibly-negative arguments must be
/// combined without overflow.
struct SignedLogGamma {
  double log_abs;
  int sign;  // +1 or -1
};
SignedLogGamma signed_log_gamma(double x);

/// Riemann zeta for x > 1. The default route is the accelerated alternating
/// series (fastest); DirectSeries and OddSeries are slower independent
/// routes. Throws DomainError for x <= 1 (simple pole at x = 1) and
/// ConvergenceError if the term budget is exhausted.
double zeta(double x, ZetaRoute route);
double zeta(double x);  // AlternatingSeries

/// Dirichlet eta, evaluated directly by accelerated alternating summation.
/// Satisfies eta(x) = (1 - 2^{1-x}) zeta(x). Contractual domain x > 1.
double eta(double x);

/// Dirichlet lambda, (1 - 2^{-x}) zeta(x). Contractual domain x > 1.
double lambda(double x);

}  // namespace zetacert

#endif
