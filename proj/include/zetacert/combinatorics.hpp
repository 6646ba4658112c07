#ifndef ZETACERT_COMBINATORICS_HPP
#define ZETACERT_COMBINATORICS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace zetacert {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kStirlingMaxOrder = 64;

/// Exact triangle of Stirling numbers of the second kind S(k,p),
/// 0 <= p <= k <= k_max, built once by the recurrence
/// S(k+1,p) = p*S(k,p) + S(k,p-1) with S(0,0) = 1 and S(k,0) = 0 for k >= 1.
/// Immutable after construction; concurrent reads are safe.
class StirlingTable {
 public:
  explicit StirlingTable(int k_max = kStirlingMaxOrder);

  int k_max() const noexcept { return k_max_; }

  /// S(k,p). Throws RangeError unless 0 <= p <= k <= k_max.
  const BigInt& operator()(int k, int p) const;

  /// Row sum over p, equal to the Bell number B_k.
  BigInt row_sum(int k) const;

 private:
  int k_max_;
  std::vector<std::vector<BigInt>> rows_;
};

/// Shared immutable table with k_max = kStirlingMaxOrder.
const StirlingTable& stirling_table();

/// S(k,p) from the shared table. Throws RangeError outside 0 <= p <= k <= 64.
BigInt stirling2(int k, int p);

/// S(k,p) = (1/p!) * sum_{q=1}^{p} (-1)^{p-q} C(p,q) q^k, evaluated in exact
/// integer arithmetic. Independent of the recurrence; used as a cross-check.
BigInt stirling2_explicit_sum(int k, int p);

BigInt factorial_exact(int n);
BigInt binomial_exact(int n, int k);

/// Falling factorial beta*(beta-1)*...*(beta-n+1); 1 for n = 0.
double falling_factorial(double beta, int n);

/// The six branches of the extended binomial coefficient. N- is the set of
/// negative integers, N0 the non-negative integers. Integrality of an input
/// is exact floating-point integrality (no epsilon).
enum class BinomialCase {
  GammaRatio,     // z not in N-;  w, z-w not in N-
  ZeroGeneric,    // z not in N-;  w in N- or z-w in N-
  FallingOverW,   // z in N-;  w in N0
  FallingOverZW,  // z, w in N-;  z-w in N0
  ZeroNegative,   // z, w in N-;  z-w in N-
  Infinite,       // z in N-;  w not in Z
};

const char* to_string(BinomialCase c);

/// Total classification of finite (z, w) into the branch table above.
BinomialCase classify_binomial(double z, double w);

/// Extended binomial coefficient. The Infinite branch returns +inf (a
/// divergence sentinel, not an exception). The GammaRatio branch is computed
/// in log space with explicit sign bookkeeping so arguments up to the gamma
/// overflow threshold stay finite.
double binom(double z, double w);

}  // namespace zetacert

#endif
