#ifndef ZETACERT_RICHARDSON_HPP
#define ZETACERT_RICHARDSON_HPP

#include <functional>

namespace zetacert {

/// k-th derivative of f at t (1 <= k <= 5) by symmetric central differences
/// with Richardson extrapolation: a Neville tableau over successive step
/// halvings, returning the entry with the smallest observed error. Used as
/// the independent derivative oracle for the closed-form kernel derivatives
/// and the complete-monotonicity spot checks.
///
/// h0 is the initial step; it is clamped so every stencil point stays
/// strictly positive when t > 0. If err_out is non-null it receives the
/// internal error estimate.
double nth_derivative(const std::function<double(double)>& f, int k, double t,
                      double h0 = 0.0, double* err_out = nullptr);

}  // namespace zetacert

#endif
