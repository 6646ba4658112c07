#include "zetacert/richardson.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "zetacert/errors.hpp"

namespace zetacert {

namespace {

// Symmetric central-difference stencils, leading error O(h^2), so each
// Neville level cancels another even power of h.
double central_difference(const std::function<double(double)>& f, int k,
                          double t, double h) {
  switch (k) {
    case 1:
      return (f(t + h) - f(t - h)) / (2.0 * h);
    case 2:
      return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
    case 3:
      return (f(t + 2 * h) - 2.0 * f(t + h) + 2.0 * f(t - h) - f(t - 2 * h)) /
             (2.0 * h * h * h);
    case 4:
      return (f(t + 2 * h) - 4.0 * f(t + h) + 6.0 * f(t) - 4.0 * f(t - h) +
              f(t - 2 * h)) /
             (h * h * h * h);
    case 5:
      return (f(t + 3 * h) - 4.0 * f(t + 2 * h) + 5.0 * f(t + h) -
              5.0 * f(t - h) + 4.0 * f(t - 2 * h) - f(t - 3 * h)) /
             (2.0 * h * h * h * h * h);
    default:
      throw RangeError("nth_derivative: order must be in 1..5");
  }
}

int stencil_span(int k) { return k <= 2 ? 1 : (k <= 4 ? 2 : 3); }

constexpr double kInvSqrt2 = 0.70710678118654752;

}  // namespace

double nth_derivative(const std::function<double(double)>& f, int k, double t,
                      double h0, double* err_out) {
  if (k < 1 || k > 5) throw RangeError("nth_derivative: order must be in 1..5");
  const int span = stencil_span(k);
  if (h0 <= 0.0) h0 = 0.2;
  if (t > 0.0) h0 = std::min(h0, t / (2.0 * span + 2.0));

  // Neville tableau over step contraction by 1/sqrt(2); the error series in
  // h^2 makes the extrapolation factors 2, 4, 8, ... Track the entry with
  // the smallest observed spread and stop once contraction only adds noise.
  constexpr int kMaxRounds = 14;
  std::array<std::array<double, kMaxRounds>, kMaxRounds> a{};
  double h = h0;
  double best = a[0][0] = central_difference(f, k, t, h);
  double best_err = std::numeric_limits<double>::max();

  for (int i = 1; i < kMaxRounds; ++i) {
    h *= kInvSqrt2;
    a[0][i] = central_difference(f, k, t, h);
    double factor = 2.0;
    for (int j = 1; j <= i; ++j) {
      a[j][i] = (factor * a[j - 1][i] - a[j - 1][i - 1]) / (factor - 1.0);
      factor *= 2.0;
      const double err = std::max(std::abs(a[j][i] - a[j - 1][i]),
                                  std::abs(a[j][i] - a[j - 1][i - 1]));
      if (err < best_err) {
        best_err = err;
        best = a[j][i];
      }
    }
    if (std::abs(a[i][i] - a[i - 1][i - 1]) >= 2.0 * best_err) break;
  }
  if (err_out) *err_out = best_err;
  return best;
}

}  // namespace zetacert
