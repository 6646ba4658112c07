#include "zetacert/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zetacert/errors.hpp"
#include "zetacert/quad.hpp"

namespace zetacert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Lanczos coefficients, g = 607/128, 14-term rational series (Press et al.,
// 3rd ed.). Provenance pinned by the oracle-point test in test_specfun.
constexpr double kLanczosCoef[14] = {
    57.1562356658629235,     -59.5979603554754912,
    14.1360979747417471,     -0.491913816097620199,
    0.339946499848118887e-4, 0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3,
    -0.210264441724104883e-3, 0.217439618115212643e-3,
    -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5};
constexpr double kLanczosGPlusHalf = 5.24218750000000000;  // g + 1/2
constexpr double kLanczosSeriesBase = 0.999999999999997092;
constexpr double kSqrtTwoPi = 2.5066282746310005;

double lanczos_log_gamma(double x) {
  double y = x;
  double t = x + kLanczosGPlusHalf;
  t = (x + 0.5) * std::log(t) - t;
  double ser = kLanczosSeriesBase;
  for (double c : kLanczosCoef) ser += c / ++y;
  return t + std::log(kSqrtTwoPi * ser / x);
}

// sin(pi*x) with the argument reduced to |r| <= 1/2 so accuracy holds near
// the zeros at the integers.
double sin_pi(double x) {
  const double n = std::round(x);
  const double r = x - n;
  const double s = std::sin(std::numbers::pi * r);
  return (std::fmod(std::abs(n), 2.0) == 1.0) ? -s : s;
}

// B_{2j}/(2j)! for j = 0..14, the Euler-Maclaurin correction weights.
constexpr double kBernOverFact[15] = {
    1.0,
    0.083333333333333333,
    -0.0013888888888888889,
    3.3068783068783069e-05,
    -8.2671957671957672e-07,
    2.0876756987868099e-08,
    -5.2841901386874932e-10,
    1.3382536530684679e-11,
    -3.3896802963225829e-13,
    8.5860620562778446e-15,
    -2.1748686985580619e-16,
    5.5090028283602295e-18,
    -1.3954464685812523e-19,
    3.5347070396294675e-21,
    -8.9535174270375469e-23,
};

// Explicit terms before the Euler-Maclaurin tail. The j-th correction decays
// like ((x+2j)/(2*pi*y))^2 per order with y the expansion point, so y of
// order (x+28)/3.4 makes the 14-term tail converge with margin.
int em_term_count(double x) {
  const double m = (x + 28.0) / 3.4 + 1.0;
  if (m > static_cast<double>(kSeriesTermBudget)) {
    throw ConvergenceError("zeta series: term budget of 1e6 exhausted at x = " +
                           std::to_string(x));
  }
  return m < 18.0 ? 18 : static_cast<int>(m);
}

// sum_{k=1}^{inf} k^{-x}: partial sum to M plus Euler-Maclaurin completion.
double zeta_direct_series(double x) {
  const int m = em_term_count(x);
  double sum = 0.0;
  for (int k = m; k >= 1; --k) sum += std::pow(static_cast<double>(k), -x);

  const double y = static_cast<double>(m) + 1.0;
  const double p0 = std::pow(y, -x);
  double tail = p0 * y / (x - 1.0) + 0.5 * p0;
  double rising = x;          // x(x+1)...(x+2j-2)
  double ypow = p0 / y;       // y^{-x-2j+1}
  bool converged = false;
  double term = 0.0;
  for (int j = 1; j <= 14; ++j) {
    term = kBernOverFact[j] * rising * ypow;
    tail += term;
    if (std::abs(term) <= 0.25 * kEps * (sum + tail)) {
      converged = true;
      break;
    }
    rising *= (x + 2.0 * j - 1.0) * (x + 2.0 * j);
    ypow /= y * y;
  }
  if (!converged && std::abs(term) > 2.0 * kEps * (sum + tail)) {
    throw ConvergenceError("zeta DirectSeries: Euler-Maclaurin tail did not converge");
  }
  return sum + tail;
}

// sum_{k=1}^{inf} (2k-1)^{-x}, then divide by (1 - 2^{-x}).
double zeta_odd_series(double x) {
  const int m = em_term_count(x);
  double sum = 0.0;
  for (int k = m; k >= 1; --k) sum += std::pow(2.0 * k - 1.0, -x);

  const double y = 2.0 * m + 1.0;
  const double p0 = std::pow(y, -x);
  double tail = p0 * y / (2.0 * (x - 1.0)) + 0.5 * p0;
  double rising = x;
  double twopow = 2.0;        // 2^{2j-1}
  double ypow = p0 / y;
  bool converged = false;
  double term = 0.0;
  for (int j = 1; j <= 14; ++j) {
    term = kBernOverFact[j] * twopow * rising * ypow;
    tail += term;
    if (std::abs(term) <= 0.25 * kEps * (sum + tail)) {
      converged = true;
      break;
    }
    rising *= (x + 2.0 * j - 1.0) * (x + 2.0 * j);
    twopow *= 4.0;
    ypow /= y * y;
  }
  if (!converged && std::abs(term) > 2.0 * kEps * (sum + tail)) {
    throw ConvergenceError("zeta OddSeries: Euler-Maclaurin tail did not converge");
  }
  const double odd_sum = sum + tail;
  return odd_sum / -std::expm1(-x * std::numbers::ln2);
}

// Cohen-Rodriguez Villegas-Zagier acceleration of the alternating series
// sum (-1)^k (k+1)^{-x}; the error decays like (3+sqrt(8))^{-n}.
double eta_accelerated(double x) {
  constexpr int n = 30;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * std::pow(static_cast<double>(k) + 1.0, -x);
    b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

void require_zeta_domain(double x, const char* fn) {
  if (!(x > 1.0)) {
    throw DomainError(std::string(fn) + " requires x > 1: pole at x = 1");
  }
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  return lanczos_log_gamma(x);
}

SignedLogGamma signed_log_gamma(double x) {
  if (x > 0.0) return {lanczos_log_gamma(x), 1};
  if (std::floor(x) == x) {
    throw PoleError("gamma pole at non-positive integer x = " + std::to_string(x));
  }
  // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1-x))
  const double s = sin_pi(x);
  const double log_abs =
      std::log(std::numbers::pi) - std::log(std::abs(s)) - lanczos_log_gamma(1.0 - x);
  return {log_abs, s > 0.0 ? 1 : -1};
}

double gamma(double x) {
  if (x <= 0.0 && std::floor(x) == x) {
    throw PoleError("gamma pole at non-positive integer x = " + std::to_string(x));
  }
  if (x > kGammaOverflowThreshold) return kInf;  // overflow sentinel
  const SignedLogGamma slg = signed_log_gamma(x);
  return slg.sign * std::exp(slg.log_abs);
}

double zeta(double x, ZetaRoute route) {
  require_zeta_domain(x, "zeta");
  switch (route) {
    case ZetaRoute::DirectSeries:
      return zeta_direct_series(x);
    case ZetaRoute::OddSeries:
      return zeta_odd_series(x);
    case ZetaRoute::AlternatingSeries:
      return eta_accelerated(x) / -std::expm1((1.0 - x) * std::numbers::ln2);
    case ZetaRoute::IntegralRepresentation:
      return integrate_bose_moment_scaled(x, 1e-10, lanczos_log_gamma(x)).value;
  }
  throw DomainError("zeta: unknown route");
}

double zeta(double x) { return zeta(x, ZetaRoute::AlternatingSeries); }

double eta(double x) {
  require_zeta_domain(x, "eta");
  return eta_accelerated(x);
}

double lambda(double x) {
  require_zeta_domain(x, "lambda");
  return -std::expm1(-x * std::numbers::ln2) * zeta(x);
}

}  // namespace zetacert
