#pragma once

// Classical number sequences: Stirling numbers of both kinds, Bernoulli
// numbers and Bernoulli polynomials of higher order, zeta at non-positive
// integers.
//
// Bernoulli convention: generating function x / (e^x - 1), so B_1 = -1/2.

#include "hurwitz/memo.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace hurwitz {

/// Number of partitions of a k-set into m nonempty blocks.
inline BigInt stirling2(long k, long m) {
  if (k < 0 || m < 0) throw std::domain_error("stirling2 needs nonnegative arguments");
  static detail::Memo<std::pair<long, long>, BigInt> memo;
  if (m > k) return 0;
  if (k == m) return 1;
  if (m == 0) return 0;
  return memo.get({k, m}, [&] { return BigInt(m * stirling2(k - 1, m) + stirling2(k - 1, m - 1)); });
}

/// Number of permutations of [n] with exactly k cycles.
inline BigInt stirling1_unsigned(long n, long k) {
  if (n < 0 || k < 0) throw std::domain_error("stirling1 needs nonnegative arguments");
  static detail::Memo<std::pair<long, long>, BigInt> memo;
  if (k > n) return 0;
  if (n == k) return 1;
  if (k == 0) return 0;
  return memo.get({n, k},
                  [&] { return BigInt((n - 1) * stirling1_unsigned(n - 1, k) + stirling1_unsigned(n - 1, k - 1)); });
}

/// B_n with B_1 = -1/2.
inline Rat bernoulli_number(long n) {
  if (n < 0) throw std::domain_error("negative Bernoulli index");
  static detail::Memo<long, Rat> memo;
  if (n == 0) return 1;
  if (n > 1 && n % 2 == 1) return 0;
  return memo.get(n, [&] {
    // sum_{k=0}^{n} C(n+1, k) B_k = 0
    Rat acc = 0;
    for (long k = 0; k < n; ++k) acc += Rat(binomial(n + 1, k)) * bernoulli_number(k);
    return Rat(-acc / Rat(n + 1));
  });
}

namespace detail {

/// (x / (e^x - 1))^order as a univariate series in "x" up to x^cap.
inline TruncSeries bernoulli_kernel_power(long order, int cap) {
  static Memo<std::pair<long, int>, TruncSeries> memo;
  return memo.get({order, cap}, [&] {
    // x / (e^x - 1) = 1 / (sum_{k>=0} x^k / (k+1)!), inverted by recursion.
    std::vector<Rat> inv(static_cast<size_t>(cap) + 1);
    inv[0] = 1;
    for (int n = 1; n <= cap; ++n) {
      Rat acc = 0;
      for (int k = 1; k <= n; ++k) acc += inv[static_cast<size_t>(n - k)] / Rat(factorial(k + 1));
      inv[static_cast<size_t>(n)] = -acc;
    }
    TruncSeries base({"x"}, {cap});
    for (int n = 0; n <= cap; ++n) base.add_term({n}, inv[static_cast<size_t>(n)]);
    return base.pow(static_cast<unsigned>(order));
  });
}

}  // namespace detail

/// Bernoulli polynomial of order N: n! [x^n] (x / (e^x - 1))^N e^{x z}.
inline Rat bernoulli_poly_order(long n, long order, const Rat& z) {
  if (n < 0) throw std::domain_error("negative Bernoulli polynomial index");
  if (order < 0) throw std::domain_error("negative Bernoulli polynomial order");
  const int cap = static_cast<int>(n);
  TruncSeries exz = TruncSeries::monomial({"x"}, {cap}, "x", 1, z).exp();
  TruncSeries g = detail::bernoulli_kernel_power(order, cap) * exz;
  return g.coeff({cap}) * Rat(factorial(n));
}

/// zeta(-k) for k >= 0, exactly.
inline Rat zeta_neg(long k) {
  if (k < 0) throw std::domain_error("zeta_neg needs k >= 0");
  if (k == 0) return make_rat(-1, 2);
  return -bernoulli_number(k + 1) / Rat(k + 1);
}

}  // namespace hurwitz
