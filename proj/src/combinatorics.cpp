#include "zetacert/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "zetacert/errors.hpp"
#include "zetacert/specfun.hpp"

namespace zetacert {

namespace {

bool is_integer(double v) { return std::floor(v) == v; }
bool in_negative_integers(double v) { return is_integer(v) && v < 0.0; }
bool in_nonnegative_integers(double v) { return is_integer(v) && v >= 0.0; }

}  // namespace

StirlingTable::StirlingTable(int k_max) : k_max_(k_max) {
  if (k_max < 0) throw RangeError("StirlingTable: k_max must be >= 0");
  rows_.resize(static_cast<std::size_t>(k_max) + 1);
  rows_[0] = {BigInt(1)};
  for (int k = 1; k <= k_max; ++k) {
    auto& row = rows_[static_cast<std::size_t>(k)];
    const auto& prev = rows_[static_cast<std::size_t>(k - 1)];
    row.resize(static_cast<std::size_t>(k) + 1);
    row[0] = 0;
    for (int p = 1; p < k; ++p) {
      row[static_cast<std::size_t>(p)] =
          p * prev[static_cast<std::size_t>(p)] + prev[static_cast<std::size_t>(p - 1)];
    }
    row[static_cast<std::size_t>(k)] = 1;
  }
}

const BigInt& StirlingTable::operator()(int k, int p) const {
  if (k < 0 || k > k_max_ || p < 0 || p > k) {
    throw RangeError("stirling2: requires 0 <= p <= k <= " + std::to_string(k_max_) +
                     ", got k=" + std::to_string(k) + " p=" + std::to_string(p));
  }
  return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
}

BigInt StirlingTable::row_sum(int k) const {
  if (k < 0 || k > k_max_) throw RangeError("row_sum: k out of range");
  BigInt sum = 0;
  for (const auto& v : rows_[static_cast<std::size_t>(k)]) sum += v;
  return sum;
}

const StirlingTable& stirling_table() {
  static const StirlingTable table(kStirlingMaxOrder);
  return table;
}

BigInt stirling2(int k, int p) { return stirling_table()(k, p); }

BigInt factorial_exact(int n) {
  if (n < 0) throw RangeError("factorial_exact: n must be >= 0");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial_exact(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact: r is C(n-k+i, i) after each step
  }
  return r;
}

BigInt stirling2_explicit_sum(int k, int p) {
  if (k < 0 || p < 0 || p > k) throw RangeError("stirling2_explicit_sum: bad indices");
  if (k == 0) return 1;  // S(0,0)
  if (p == 0) return 0;
  BigInt acc = 0;
  for (int q = 1; q <= p; ++q) {
    BigInt term = binomial_exact(p, q) * boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(k));
    if ((p - q) % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc / factorial_exact(p);
}

double falling_factorial(double beta, int n) {
  if (n < 0) throw RangeError("falling_factorial: n must be >= 0");
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= beta - i;
  return r;
}

const char* to_string(BinomialCase c) {
  switch (c) {
    case BinomialCase::GammaRatio: return "GammaRatio";
    case BinomialCase::ZeroGeneric: return "ZeroGeneric";
    case BinomialCase::FallingOverW: return "FallingOverW";
    case BinomialCase::FallingOverZW: return "FallingOverZW";
    case BinomialCase::ZeroNegative: return "ZeroNegative";
    case BinomialCase::Infinite: return "Infinite";
  }
  return "?";
}

BinomialCase classify_binomial(double z, double w) {
  if (!std::isfinite(z) || !std::isfinite(w)) {
    throw DomainError("classify_binomial: z and w must be finite");
  }
  if (!in_negative_integers(z)) {
    if (in_negative_integers(w) || in_negative_integers(z - w)) {
      return BinomialCase::ZeroGeneric;
    }
    return BinomialCase::GammaRatio;
  }
  // z in N-
  if (in_nonnegative_integers(w)) return BinomialCase::FallingOverW;
  if (in_negative_integers(w)) {
    if (in_nonnegative_integers(z - w)) return BinomialCase::FallingOverZW;
    return BinomialCase::ZeroNegative;
  }
  return BinomialCase::Infinite;
}

namespace {

// n! as a double; exact through 20!, floating beyond.
double factorial_double(int n) {
  if (n <= 20) {
    return static_cast<double>(factorial_exact(n).convert_to<std::uint64_t>());
  }
  double r = static_cast<double>(factorial_exact(20).convert_to<std::uint64_t>());
  for (int i = 21; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

double binom(double z, double w) {
  switch (classify_binomial(z, w)) {
    case BinomialCase::ZeroGeneric:
    case BinomialCase::ZeroNegative:
      return 0.0;
    case BinomialCase::Infinite:
      return std::numeric_limits<double>::infinity();
    case BinomialCase::FallingOverW: {
      const int n = static_cast<int>(w);
      return falling_factorial(z, n) / factorial_double(n);
    }
    case BinomialCase::FallingOverZW: {
      const int n = static_cast<int>(z - w);
      return falling_factorial(z, n) / factorial_double(n);
    }
    case BinomialCase::GammaRatio: {
      const SignedLogGamma num = signed_log_gamma(z + 1.0);
      const SignedLogGamma dw = signed_log_gamma(w + 1.0);
      const SignedLogGamma dzw = signed_log_gamma(z - w + 1.0);
      const double log_mag = num.log_abs - dw.log_abs - dzw.log_abs;
      return num.sign * dw.sign * dzw.sign * std::exp(log_mag);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();  // unreachable
}

}  // namespace zetacert
