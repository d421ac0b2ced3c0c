#pragma once

// Hook-basis decomposition of rho(beta) = prod (x^{beta_i} - y^{beta_i}).
//
// rho(theta_{1,d}), ..., rho(theta_{d,d}) form a basis of the homogeneous
// degree-d polynomials vanishing at x = y = 1. Coordinates are found from
// the x-derivatives at (1, 1), which gives a triangular system.

#include "hurwitz/hurwitz_numbers.hpp"
#include "hurwitz/memo.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

/// Homogeneous polynomial sum_i coeffs[i] x^i y^{d-i}.
struct BiPoly {
  int d = 0;
  std::vector<Rat> coeffs{Rat(0)};

  static BiPoly zero(int degree) { return {degree, std::vector<Rat>(static_cast<size_t>(degree) + 1, Rat(0))}; }

  /// x^a - y^a.
  static BiPoly binomial_difference(int a) {
    BiPoly p = zero(a);
    p.coeffs[static_cast<size_t>(a)] = 1;
    p.coeffs[0] -= 1;
    return p;
  }

  bool in_hat_space() const {
    Rat s = 0;
    for (const auto& c : coeffs) s += c;
    return s == 0;
  }

  Rat evaluate(const Rat& x, const Rat& y) const {
    Rat total = 0;
    for (int i = 0; i <= d; ++i) total += coeffs[static_cast<size_t>(i)] * pow(x, i) * pow(y, d - i);
    return total;
  }

  /// Same polynomial with x and y exchanged.
  BiPoly swapped() const {
    BiPoly r = *this;
    std::reverse(r.coeffs.begin(), r.coeffs.end());
    return r;
  }

  BiPoly& operator+=(const BiPoly& o) {
    if (o.d != d) throw std::invalid_argument("adding polynomials of different degree");
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r = zero(a.d + b.d);
    for (int i = 0; i <= a.d; ++i) {
      if (a.coeffs[static_cast<size_t>(i)] == 0) continue;
      for (int j = 0; j <= b.d; ++j) r.coeffs[static_cast<size_t>(i + j)] += a.coeffs[static_cast<size_t>(i)] * b.coeffs[static_cast<size_t>(j)];
    }
    return r;
  }
  friend BiPoly operator*(BiPoly a, const Rat& c) {
    for (auto& v : a.coeffs) v *= c;
    return a;
  }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;
};

inline BiPoly rho_poly(const Partition& beta) {
  if (beta.empty()) throw std::invalid_argument("rho_poly needs a non-empty partition");
  BiPoly p = BiPoly::zero(0);
  p.coeffs[0] = 1;
  for (int b : beta.parts()) p = p * BiPoly::binomial_difference(b);
  return p;
}

namespace detail {

/// Sum over compositions b_1 + ... + b_n = k, b_i >= 1, of
/// multinomial(k; b) prod (beta_i)_{b_i}.
inline BigInt rho_k_multinomial(const Partition& beta, int k) {
  const auto& parts = beta.parts();
  const size_t n = parts.size();
  if (n == 0) return k == 0 ? BigInt(1) : BigInt(0);
  BigInt total = 0;
  std::vector<int> b(n, 1);
  std::function<void(size_t, int)> rec = [&](size_t idx, int left) {
    if (idx + 1 == n) {
      if (left < 1) return;
      b[idx] = left;
      BigInt term = factorial(k);
      for (size_t i = 0; i < n; ++i) term = term / factorial(b[i]) * falling_factorial(static_cast<long>(parts[i]), b[i]);
      total += term;
      return;
    }
    for (int v = 1; v <= left - static_cast<int>(n - idx - 1); ++v) {
      b[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  if (k >= static_cast<int>(n)) rec(0, k);
  return total;
}

/// d^k/dx^k prod (x^{beta_i} - 1) at x = 1.
inline BigInt rho_k_derivative(const Partition& beta, int k) {
  std::vector<BigInt> poly{BigInt(1)};
  for (int b : beta.parts()) {
    std::vector<BigInt> next(poly.size() + static_cast<size_t>(b), BigInt(0));
    for (size_t e = 0; e < poly.size(); ++e) {
      next[e + static_cast<size_t>(b)] += poly[e];
      next[e] -= poly[e];
    }
    poly = std::move(next);
  }
  BigInt total = 0;
  for (size_t e = 0; e < poly.size(); ++e) total += poly[e] * falling_factorial(static_cast<long>(e), k);
  return total;
}

}  // namespace detail

/// rho^k_beta, computed both ways and checked.
inline BigInt rho_k(const Partition& beta, int k) {
  if (k < 0) throw std::invalid_argument("rho_k needs k >= 0");
  BigInt a = detail::rho_k_multinomial(beta, k);
  BigInt b = detail::rho_k_derivative(beta, k);
  if (a != b) throw internal_error("rho_k: multinomial and derivative forms disagree for " + beta.to_string());
  return a;
}

/// rho^k of theta_{i,d}: (k)_{d-i} (i)_{k-d+i} for k > d - i, else 0.
inline BigInt rho_k_theta(int i, int d, int k) {
  if (k <= d - i) return 0;
  return falling_factorial(static_cast<long>(k), d - i) * falling_factorial(static_cast<long>(i), k - d + i);
}

struct DecompCoeffs {
  int d = 0;
  std::map<int, Rat> a;  // i -> a_i for i = 1..d

  Rat operator[](int i) const {
    auto it = a.find(i);
    return it == a.end() ? Rat(0) : it->second;
  }

  BiPoly reconstruct() const {
    BiPoly p = BiPoly::zero(d);
    for (const auto& [i, c] : a)
      if (c != 0) p += rho_poly(theta(i, d)) * c;
    return p;
  }

  /// a_i = 0 for i >= d - l + 2, and whenever d - i - l is even.
  bool vanishing_holds(int length) const {
    for (const auto& [i, c] : a) {
      if (c == 0) continue;
      if (i >= d - length + 2) return false;
      if ((d - i - length) % 2 == 0) return false;
    }
    return true;
  }

  friend bool operator==(const DecompCoeffs&, const DecompCoeffs&) = default;
};

namespace detail {

/// Full triangular system: row k = 1..d pins a_{d+1-k}.
inline DecompCoeffs decompose_full(const Partition& beta) {
  const int d = beta.size();
  DecompCoeffs out{d, {}};
  for (int k = 1; k <= d; ++k) {
    const int i = d + 1 - k;
    Rat rhs = Rat(rho_k(beta, k));
    for (int j = i + 1; j <= d; ++j) rhs -= Rat(rho_k_theta(j, d, k)) * out[j];
    out.a[i] = rhs / Rat(rho_k_theta(i, d, k));
  }
  return out;
}

/// Parity-aware system: only i = d-c+1, d-c-1, ..., 1+delta can be nonzero,
/// with delta = 1 when d - c is odd; rows k = c, c+2, ..., d-delta.
inline DecompCoeffs decompose_reduced(const Partition& beta) {
  const int d = beta.size();
  const int c = beta.length();
  const int delta = (d - c) % 2 != 0 ? 1 : 0;
  DecompCoeffs out{d, {}};
  for (int i = 1; i <= d; ++i) out.a[i] = 0;
  std::vector<int> unknowns;
  for (int i = d - c + 1; i >= 1 + delta; i -= 2) unknowns.push_back(i);
  int k = c;
  for (size_t r = 0; r < unknowns.size(); ++r, k += 2) {
    const int i = unknowns[r];
    Rat rhs = Rat(rho_k(beta, k));
    for (size_t s = 0; s < r; ++s) rhs -= Rat(rho_k_theta(unknowns[s], d, k)) * out[unknowns[s]];
    BigInt diag = rho_k_theta(i, d, k);
    if (diag == 0) throw internal_error("reduced decomposition hit a zero pivot");
    out.a[i] = rhs / Rat(diag);
  }
  if (k - 2 != d - delta && !unknowns.empty()) throw internal_error("reduced decomposition row count mismatch");
  return out;
}

}  // namespace detail

/// Hook-basis coordinates of rho(beta). Both solvers run and must agree; the
/// reconstruction is checked exactly.
inline DecompCoeffs decompose(const Partition& beta) {
  if (beta.empty()) throw std::invalid_argument("decompose needs a non-empty partition");
  static detail::Memo<Partition, DecompCoeffs> memo;
  return memo.get(beta, [&] {
    DecompCoeffs reduced = detail::decompose_reduced(beta);
    DecompCoeffs full = detail::decompose_full(beta);
    if (!(reduced == full)) throw internal_error("reduced and full decompositions disagree for " + beta.to_string());
    if (!(full.reconstruct() == rho_poly(beta))) throw internal_error("decomposition does not reconstruct " + beta.to_string());
    return full;
  });
}

/// The constant in front of a_{i,K} a_{j,beta} H-tilde(theta_i; theta_j):
/// (1 / prod k!) |C_beta| / |C_{theta_j}|. It depends on j only.
inline Rat hook_term_constant(const Partition& K, const Partition& beta, int j) {
  BigInt kf = 1;
  for (int k : K.parts()) kf *= factorial(k);
  return Rat(class_size(beta)) / Rat(kf * class_size(theta(j, beta.size())));
}

/// H_{d,m}(K; (d), beta) assembled from hook-shape numbers.
inline Rat h_via_hooks(int d, int m, const Partition& K, const Partition& beta) {
  if (K.empty()) throw std::invalid_argument("h_via_hooks needs a non-empty K");
  if (beta.size() != d) throw std::invalid_argument("beta " + beta.to_string() + " is not a partition of " + std::to_string(d));
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (m > d) return 0;
  const int dprime = K.size();
  const DecompCoeffs aK = decompose(K);
  const DecompCoeffs aB = decompose(beta);
  Rat total = 0;
  for (const auto& [i, ai] : aK.a) {
    if (ai == 0) continue;
    for (const auto& [j, aj] : aB.a) {
      if (aj == 0) continue;
      total += ai * aj * hook_term_constant(K, beta, j) * h_hook(d, m, dprime, i, j);
    }
  }
  return total;
}

}  // namespace hurwitz
