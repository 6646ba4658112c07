#include "zetacert/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "zetacert/bose_kernel.hpp"
#include "zetacert/combinatorics.hpp"
#include "zetacert/errors.hpp"

namespace zetacert {

namespace {

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double value;
  double err;  // |K15 - G7|, a conservative bound on the K15 error
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double hl = 0.5 * (b - a);
  const double fc = f(c);
  double fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double absc = hl * kXgk[j];
    fv1[j] = f(c - absc);
    fv2[j] = f(c + absc);
  }
  double resg = kWg[3] * fc;
  for (int j = 0; j < 3; ++j) resg += kWg[j] * (fv1[2 * j + 1] + fv2[2 * j + 1]);
  double resk = kWgk[7] * fc;
  for (int j = 0; j < 7; ++j) resk += kWgk[j] * (fv1[j] + fv2[j]);
  return {hl * resk, hl * std::abs(resk - resg)};
}

struct Region {
  double a, b, value, err;
  bool splittable;
};

struct AdaptResult {
  double value;
  double err;
};

// Globally adaptive bisection: repeatedly split the worst panel (leftmost on
// ties) until the summed estimate drops below abs_tol. Deterministic for
// identical inputs; the final value is summed in ascending interval order.
AdaptResult adapt_into(const std::function<double(double)>& f, double a,
                       double b, double abs_tol, int& budget, int& panels) {
  auto make_region = [&](double lo, double hi) {
    if (--budget < 0) {
      throw ToleranceNotMet("adaptive quadrature: panel budget exhausted");
    }
    ++panels;
    const Panel p = gk15(f, lo, hi);
    const bool splittable = (hi - lo) > 8.0 * std::numeric_limits<double>::epsilon() *
                                             std::max(std::abs(lo), std::abs(hi));
    return Region{lo, hi, p.value, p.err, splittable};
  };

  std::vector<Region> regions;
  regions.push_back(make_region(a, b));
  double total_err = regions[0].err;

  while (total_err > abs_tol) {
    int worst = -1;
    double worst_err = 0.0;
    for (int i = 0; i < static_cast<int>(regions.size()); ++i) {
      if (regions[i].splittable && regions[i].err > worst_err) {
        worst_err = regions[i].err;
        worst = i;
      }
    }
    if (worst < 0) break;  // nothing left to split; report the honest error
    const Region old = regions[static_cast<std::size_t>(worst)];
    const double mid = 0.5 * (old.a + old.b);
    const Region left = make_region(old.a, mid);
    const Region right = make_region(mid, old.b);
    regions[static_cast<std::size_t>(worst)] = left;
    regions.push_back(right);
    total_err += left.err + right.err - old.err;
  }

  std::sort(regions.begin(), regions.end(),
            [](const Region& x, const Region& y) { return x.a < y.a; });
  AdaptResult out{0.0, 0.0};
  for (const Region& r : regions) {
    out.value += r.value;
    out.err += r.err;
  }
  return out;
}

constexpr double kStubEps = 0.0009765625;  // 2^-10, analytic stub upper end
constexpr int kStubDegree = 16;

// Maclaurin coefficients of t/(e^t - 1): B_n/n!. Odd degrees >= 3 vanish.
using Series = std::array<double, kStubDegree + 1>;

Series bose_series() {
  Series s{};
  s[0] = 1.0;
  s[1] = -0.5;
  s[2] = 0.083333333333333333;    // B2/2!
  s[4] = -0.0013888888888888889;  // B4/4!
  s[6] = 3.3068783068783069e-05;
  s[8] = -8.2671957671957672e-07;
  s[10] = 2.0876756987868099e-08;
  s[12] = -5.2841901386874932e-10;
  s[14] = 1.3382536530684679e-11;
  s[16] = -3.3896802963225829e-13;
  return s;
}

Series multiply(const Series& x, const Series& y) {
  Series out{};
  for (int i = 0; i <= kStubDegree; ++i) {
    if (x[static_cast<std::size_t>(i)] == 0.0) continue;
    for (int j = 0; i + j <= kStubDegree; ++j) {
      out[static_cast<std::size_t>(i + j)] +=
          x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

double factorial_as_double(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// integral_0^eps F_k(t) t^c dt via F_k(t) t^c = sum_p cp t^{c-p} (t/(e^t-1))^p:
// each power of the Maclaurin series integrates term by term. Exponents
// c - p + m + 1 are strictly positive because c > k >= p - 1.
double stub_value(int k, double c, double scale, double* err_out) {
  const Series base = bose_series();
  Series power = base;  // (t/(e^t-1))^p, starting at p = 1
  double total = 0.0;
  double trunc = 0.0;
  for (int p = 1; p <= k + 1; ++p) {
    if (p > 1) power = multiply(power, base);
    const double cp =
        factorial_as_double(p - 1) * stirling2(k + 1, p).convert_to<double>();
    double epow = std::pow(kStubEps, c - p + 1.0);  // eps^{c-p+m+1}, m = 0
    for (int m = 0; m <= kStubDegree; ++m) {
      const double coef = power[static_cast<std::size_t>(m)];
      if (coef != 0.0) {
        const double term = cp * coef * epow / (c - p + m + 1.0);
        total += term;
        if (m >= kStubDegree - 1) trunc += std::abs(term);
      }
      epow *= kStubEps;
    }
  }
  if (err_out) *err_out = scale * (trunc + std::numeric_limits<double>::epsilon() * std::abs(total));
  return scale * total;
}

// Certified bound on integral_T^inf of the integrand, via the upper
// incomplete gamma majorant Gamma(c+1,T) <= T^c e^{-T} / (1 - c/T) and, for
// k >= 1, the kernel bound F_k(t) <= (k+1)! 2^{k+1} e^{-t} (t >= 1).
double tail_bound(int k, double c, double T, double log_scale) {
  const double log_body = c * std::log(T) - T - log_scale;
  double prefactor;
  if (k == 0) {
    prefactor = 1.0 / -std::expm1(-T);
  } else {
    prefactor = factorial_as_double(k + 1) * std::pow(2.0, k + 1);
  }
  return prefactor * std::exp(log_body) / (1.0 - c / T);
}

void check_tolerance(double tol) {
  if (!(tol >= kQuadTolFloor && tol <= kQuadTolCeiling)) {
    throw DomainError("quadrature tol must lie in [1e-13, 1e-4], got " +
                      std::to_string(tol));
  }
}

// integral_0^inf F_k(t) t^c e^{-log_scale} dt. Requires c > k.
QuadratureResult moment_engine(int k, double c, double tol, double log_scale,
                               double t_start) {
  const double scale = std::exp(-log_scale);
  // pow(t, c) can overflow at the far panels when c*ln(T) nears 709 even
  // though the damped integrand itself is representable; switch to the
  // all-in-the-exponent form there (costs ~|exponent|*eps relative error,
  // irrelevant against any admissible tol at such c).
  const bool exponent_form =
      log_scale != 0.0 || c * std::log(t_start) > 600.0;
  std::function<double(double)> f;
  if (k == 0) {
    if (exponent_form) {
      f = [c, log_scale](double t) {
        return std::exp(c * std::log(t) - log_scale - t) / -std::expm1(-t);
      };
    } else {
      f = [c](double t) { return std::pow(t, c) / std::expm1(t); };
    }
  } else if (exponent_form) {
    f = [k, c](double t) {
      return std::exp(c * std::log(t) + std::log(kernel_derivative(k, t)));
    };
  } else {
    f = [k, c](double t) { return kernel_derivative(k, t) * std::pow(t, c); };
  }

  int budget = kQuadPanelBudget;
  int panels = 0;

  double stub_err = 0.0;
  const double stub = stub_value(k, c, scale, &stub_err);

  // coarse magnitude estimate on geometric knots, then the real passes
  double coarse = std::abs(stub);
  {
    const double r1 = std::pow(1.0 / kStubEps, 0.25);
    double lo = kStubEps;
    for (int i = 0; i < 4; ++i) {
      const double hi = (i == 3) ? 1.0 : lo * r1;
      coarse += std::abs(gk15(f, lo, hi).value);
      lo = hi;
    }
    const double r2 = std::pow(t_start, 1.0 / 16.0);
    lo = 1.0;
    for (int i = 0; i < 16; ++i) {
      const double hi = (i == 15) ? t_start : lo * r2;
      coarse += std::abs(gk15(f, lo, hi).value);
      lo = hi;
    }
    panels += 20;
    budget -= 20;
  }
  if (coarse <= 0.0) coarse = std::numeric_limits<double>::min();

  const double abs_share = 0.3 * tol * coarse;
  const AdaptResult head = adapt_into(f, kStubEps, 1.0, abs_share, budget, panels);
  const AdaptResult body = adapt_into(f, 1.0, t_start, abs_share, budget, panels);

  double value = stub + head.value + body.value;
  double err = stub_err + head.err + body.err;
  double T = t_start;
  double tb = tail_bound(k, c, T, log_scale);
  int extensions = 0;
  while (tb > 0.25 * tol * std::abs(value) && tb > 1e-300) {
    if (++extensions > 200) {
      throw ToleranceNotMet("moment integral: tail extension did not certify");
    }
    const double next = 1.25 * T;
    const AdaptResult ext = adapt_into(f, T, next, 0.25 * tol * coarse, budget, panels);
    value += ext.value;
    err += ext.err;
    T = next;
    tb = tail_bound(k, c, T, log_scale);
  }

  QuadratureResult out;
  out.value = value;
  out.error_estimate = err + tb;
  out.subdivisions = panels;
  out.truncation_point = T;
  return out;
}

}  // namespace

QuadratureResult integrate_bose_moment(double s, double tol) {
  return integrate_bose_moment_scaled(s, tol, 0.0);
}

QuadratureResult integrate_bose_moment_scaled(double s, double tol,
                                              double log_scale) {
  if (!(s > 1.0)) {
    throw DomainError("integrate_bose_moment requires s > 1 (divergent at s = 1), got " +
                      std::to_string(s));
  }
  check_tolerance(tol);
  return moment_engine(0, s - 1.0, tol, log_scale, std::max(50.0, 3.0 * s + 40.0));
}

QuadratureResult integrate_kernel_moment(int k, double s, double tol) {
  if (k < 0 || k > kKernelMaxOrder) {
    throw RangeError("integrate_kernel_moment: k must lie in 0.." +
                     std::to_string(kKernelMaxOrder));
  }
  if (!(s > static_cast<double>(k))) {
    throw DomainError("integrate_kernel_moment requires s > k for integrability at 0");
  }
  check_tolerance(tol);
  return moment_engine(k, s, tol, 0.0, std::max(50.0, 3.0 * s + 40.0));
}

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int panel_budget) {
  if (!(b > a)) throw DomainError("integrate_adaptive requires b > a");
  if (!(abs_tol > 0.0)) throw DomainError("integrate_adaptive requires abs_tol > 0");
  int budget = panel_budget;
  int panels = 0;
  const AdaptResult r = adapt_into(f, a, b, abs_tol, budget, panels);
  QuadratureResult out;
  out.value = r.value;
  out.error_estimate = r.err;
  out.subdivisions = panels;
  out.truncation_point = b;
  return out;
}

}  // namespace zetacert
