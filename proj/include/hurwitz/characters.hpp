#pragma once

// Irreducible characters of symmetric groups.
//
// hook_char_row reads a whole row of hook characters from a polynomial
// expansion; mn_char is the general Murnaghan-Nakayama recursion. The two
// paths share no code.

#include "hurwitz/memo.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hurwitz {

/// (chi^{[1^j, d-j]}(beta))_{j = 0..d-1}.
///
/// Expands prod_j (1 - y^j)^{a_j}, divides by (1 - y) and reads
/// (-1)^j chi from the coefficient of y^j.
inline std::vector<long> hook_char_row(const Partition& beta) {
  if (beta.empty()) throw std::invalid_argument("hook_char_row needs a non-empty partition");
  const int d = beta.size();
  std::vector<long> poly(static_cast<size_t>(d) + 1, 0);
  poly[0] = 1;
  int deg = 0;
  for (int part : beta.parts()) {
    // multiply by (1 - y^part)
    for (int e = deg; e >= 0; --e) poly[static_cast<size_t>(e + part)] -= poly[static_cast<size_t>(e)];
    deg += part;
  }
  // Division by (1 - y): quotient coefficients are prefix sums.
  std::vector<long> row(static_cast<size_t>(d));
  long prefix = 0;
  for (int j = 0; j < d; ++j) {
    prefix += poly[static_cast<size_t>(j)];
    row[static_cast<size_t>(j)] = (j % 2 == 0) ? prefix : -prefix;
  }
  if (prefix + poly[static_cast<size_t>(d)] != 0)
    throw internal_error("division by (1 - y) left a remainder in hook_char_row");
  return row;
}

namespace detail {

/// Beta-set of lambda with exactly `len` beads: lambda_i + len - i.
inline std::vector<int> beta_set(const std::vector<int>& parts, int len) {
  std::vector<int> b(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) {
    int p = i < static_cast<int>(parts.size()) ? parts[static_cast<size_t>(i)] : 0;
    b[static_cast<size_t>(i)] = p + len - 1 - i;
  }
  return b;  // strictly decreasing
}

inline std::vector<int> parts_from_beta(const std::vector<int>& b) {
  const int len = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int p = b[static_cast<size_t>(i)] - (len - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

inline long mn_recursive(const Partition& lambda, const Partition& mu);

inline Memo<std::pair<Partition, Partition>, long>& mn_memo() {
  static Memo<std::pair<Partition, Partition>, long> memo;
  return memo;
}

inline long mn_recursive(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return 1;
  return mn_memo().get({lambda, mu}, [&] {
    // Strip the largest part of mu: move one bead down by r on the abacus.
    const int r = mu[0];
    const Partition rest = mu.without_part(r);
    const int len = lambda.length();
    std::vector<int> b = beta_set(lambda.parts(), len);
    long total = 0;
    for (int i = 0; i < len; ++i) {
      int from = b[static_cast<size_t>(i)];
      int to = from - r;
      if (to < 0) continue;
      bool occupied = false;
      int between = 0;
      for (int x : b) {
        if (x == to) occupied = true;
        if (x > to && x < from) ++between;
      }
      if (occupied) continue;
      std::vector<int> nb = b;
      nb[static_cast<size_t>(i)] = to;
      std::sort(nb.begin(), nb.end(), std::greater<>());
      Partition smaller(parts_from_beta(nb));
      long v = mn_recursive(smaller, rest);
      total += (between % 2 == 0) ? v : -v;
    }
    return total;
  });
}

}  // namespace detail

/// chi^lambda evaluated on the class mu, by border-strip removal.
inline long mn_char(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("mn_char needs |lambda| = |mu|");
  return detail::mn_recursive(lambda, mu);
}

/// Hook length formula.
inline BigInt dim_irrep(const Partition& lambda) { return factorial(lambda.size()) / hook_product(lambda); }

/// chi^{[1^k, d-k]} on the class [1^{d-j}, j] in closed form.
///
/// Removing the j-strip first leaves [1^{d-j}] on a smaller hook, whose
/// value is a dimension. The leg removal has height j - 1.
inline BigInt hook_on_hook_char(int d, int k, int j) {
  if (d < 1 || k < 0 || k > d - 1 || j < 1 || j > d) throw std::invalid_argument("hook_on_hook_char index out of range");
  if (j == d) return BigInt(sign_pow(k));
  return binomial(d - j - 1, k) + sign_pow(j - 1) * binomial(d - j - 1, k - j);
}

/// The same pattern with the sign of the leg term dropped, i.e.
/// C(d-j-1, k) + C(d-j-1, k-j). Agrees with the true value only when j is odd
/// or the second term vanishes.
inline BigInt hook_on_hook_char_unsigned(int d, int k, int j) {
  if (d < 1 || k < 0 || k > d - 1 || j < 1 || j > d) throw std::invalid_argument("hook_on_hook_char index out of range");
  return binomial(d - j - 1, k) + binomial(d - j - 1, k - j);
}

}  // namespace hurwitz
