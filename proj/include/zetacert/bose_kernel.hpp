#ifndef ZETACERT_BOSE_KERNEL_HPP
#define ZETACERT_BOSE_KERNEL_HPP

namespace zetacert {

/// Largest derivative order evaluated in floating point. Beyond this the
/// spread of the coefficients (p-1)!*S(k+1,p) exhausts double-precision
/// dynamic range at moderate arguments.
inline constexpr int kKernelMaxOrder = 30;

/// Parameters of the generalized kernel 1/(vartheta*e^{theta*t} - 1).
struct KernelParams {
  double vartheta;  // != 0
  double theta;     // != 0
  int k;            // derivative order, 0 <= k <= kKernelMaxOrder
};

/// The Bose kernel 1/(e^t - 1) for t > 0, accurate to a few ulp uniformly
/// (expm1-based, no cancellation near 0). Throws DomainError for t <= 0.
double kernel_base(double t);

/// k-th derivative d^k/dt^k of 1/(vartheta*e^{theta*t} - 1), signed, via the
/// closed form
///   (-1)^k theta^k sum_{p=1}^{k+1} (p-1)! S(k+1,p) (1/(vartheta e^{theta t}-1))^p.
/// Admissible t: all reals when vartheta < 0; t != -ln(vartheta)/theta when
/// vartheta > 0 (SingularityError when the denominator underflows to zero).
double general_derivative(const KernelParams& params, double t);

/// The signed derivative (-1)^k (d/dt)^k of 1/(e^t - 1) on t > 0; strictly
/// positive there. Returns +inf (overflow sentinel) when the leading term
/// x^{k+1} exceeds the representable range at very small t, and the
/// correctly rounded 0 once e^t overflows (t above ~745).
double kernel_derivative(int k, double t);

/// Ratio kernel_derivative(k+1, t) / kernel_derivative(k, t), evaluated as a
/// single rational expression in x = 1/(e^t - 1) with the common factor
/// x^{k+1} divided out, so it stays finite as t -> 0+ where the individual
/// derivatives overflow. Strictly greater than 1 for all t > 0.
double kernel_ratio(int k, double t);

}  // namespace zetacert

#endif
