#include "zetacert/bose_kernel.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "zetacert/combinatorics.hpp"
#include "zetacert/errors.hpp"

namespace zetacert {

namespace {

// coefficient_rows()[k][p-1] = (p-1)! * S(k+1,p) for p = 1..k+1, converted
// from the exact table. Rows run one order past kKernelMaxOrder because the
// ratio of order k needs the numerator row k+1.
const std::vector<std::vector<double>>& coefficient_rows() {
  static const std::vector<std::vector<double>> rows = [] {
    std::vector<std::vector<double>> r(kKernelMaxOrder + 2);
    const StirlingTable& table = stirling_table();
    for (int k = 0; k <= kKernelMaxOrder + 1; ++k) {
      r[k].resize(static_cast<std::size_t>(k) + 1);
      BigInt pfact = 1;  // (p-1)!
      for (int p = 1; p <= k + 1; ++p) {
        if (p > 1) pfact *= (p - 1);
        r[k][static_cast<std::size_t>(p - 1)] =
            BigInt(pfact * table(k + 1, p)).convert_to<double>();
      }
    }
    return r;
  }();
  return rows;
}

// sum_{p=1}^{k+1} c_p y^p by Horner from the highest coefficient.
double kernel_polynomial(const std::vector<double>& c, double y) {
  double acc = c.back();
  for (int p = static_cast<int>(c.size()) - 2; p >= 0; --p) {
    acc = c[static_cast<std::size_t>(p)] + y * acc;
  }
  return y * acc;
}

void require_order(int k, int max_order, const char* fn) {
  if (k < 0 || k > max_order) {
    throw RangeError(std::string(fn) + ": order k must satisfy 0 <= k <= " +
                     std::to_string(max_order) + ", got " + std::to_string(k));
  }
}

void require_positive_t(double t, const char* fn) {
  if (!(t > 0.0)) {
    throw DomainError(std::string(fn) + " requires t > 0, got " + std::to_string(t));
  }
}

}  // namespace

double kernel_base(double t) {
  require_positive_t(t, "kernel_base");
  return 1.0 / std::expm1(t);
}

double general_derivative(const KernelParams& params, double t) {
  if (params.vartheta == 0.0 || params.theta == 0.0) {
    throw DomainError("general_derivative requires vartheta != 0 and theta != 0");
  }
  require_order(params.k, kKernelMaxOrder, "general_derivative");

  double denom;
  if (params.vartheta > 0.0) {
    denom = std::expm1(params.theta * t + std::log(params.vartheta));
    if (denom == 0.0) {
      throw SingularityError("general_derivative: t = -ln(vartheta)/theta is singular");
    }
  } else {
    denom = params.vartheta * std::exp(params.theta * t) - 1.0;
  }
  const double poly = kernel_polynomial(coefficient_rows()[params.k], 1.0 / denom);
  return std::pow(-params.theta, params.k) * poly;
}

double kernel_derivative(int k, double t) {
  require_positive_t(t, "kernel_derivative");
  require_order(k, kKernelMaxOrder, "kernel_derivative");
  const double x = 1.0 / std::expm1(t);
  if (x == 0.0) return 0.0;  // e^t overflowed; the true value underflows
  const double value = kernel_polynomial(coefficient_rows()[k], x);
  if (!(value > 0.0)) {
    throw Error("kernel_derivative: positivity violated (internal error)");
  }
  return value;  // +inf when x^{k+1} overflows
}

double kernel_ratio(int k, double t) {
  require_positive_t(t, "kernel_ratio");
  require_order(k, kKernelMaxOrder, "kernel_ratio");
  const auto& num = coefficient_rows()[k + 1];  // orders p = 1..k+2
  const auto& den = coefficient_rows()[k];      // orders p = 1..k+1
  const double u = std::expm1(t);
  const double x = 1.0 / u;
  if (x == 0.0) return 1.0;  // correctly rounded limit 1 + O(e^{-t})

  if (x <= 1.0) {
    return kernel_polynomial(num, x) / kernel_polynomial(den, x);
  }

  // Small t: divide both polynomials by the common factor x^{k+1} and
  // evaluate in u = 1/x, so the ratio stays finite where the raw
  // derivatives overflow. num/x^{k+1} = a_{k+2} x + sum_j a_{k+1-j} u^j.
  double num_acc = num[0];
  for (int p = 2; p <= k + 1; ++p) num_acc = num[static_cast<std::size_t>(p - 1)] + u * num_acc;
  num_acc += num[static_cast<std::size_t>(k + 1)] * x;
  double den_acc = den[0];
  for (int p = 2; p <= k + 1; ++p) den_acc = den[static_cast<std::size_t>(p - 1)] + u * den_acc;
  return num_acc / den_acc;
}

}  // namespace zetacert
