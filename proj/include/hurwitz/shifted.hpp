#pragma once

// Shifted power sums, the f basis, and completed cycles.
//
// A completed cycle is stored as a ClassVector keyed by un-padded
// partitions; lifting a key eta to degree d pads it with 1s.

#include "hurwitz/characters.hpp"
#include "hurwitz/memo.hpp"
#include "hurwitz/numbers.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hurwitz {

/// Sparse Rat-linear combination of partitions, zero coefficients never stored.
class ClassVector {
 public:
  using Map = std::map<Partition, Rat, CanonicalOrder>;

  ClassVector() = default;

  void add(const Partition& p, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rat operator[](const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  ClassVector& operator+=(const ClassVector& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
  }
  ClassVector& operator*=(const Rat& c) {
    if (c == 0) terms_.clear();
    for (auto& [p, v] : terms_) v *= c;
    return *this;
  }
  friend ClassVector operator*(ClassVector v, const Rat& c) { return v *= c; }
  friend bool operator==(const ClassVector&, const ClassVector&) = default;

  const Map& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Keys padded to eta^{up d}; keys larger than d are dropped. Coefficients
  /// of keys with the same padding are summed.
  ClassVector lifted(int d) const {
    ClassVector out;
    for (const auto& [p, c] : terms_)
      if (p.size() <= d) out.add(p.padded_to(d), c);
    return out;
  }

 private:
  Map terms_;
};

/// sum_i [(lambda_i - i + 1/2)^k - (-i + 1/2)^k].
inline Rat p_shift(int k, const Partition& lambda) {
  if (k < 1) throw std::invalid_argument("p_shift needs k >= 1");
  Rat acc = 0;
  for (int i = 1; i <= lambda.length(); ++i) {
    Rat a = make_rat(2 * lambda[static_cast<size_t>(i - 1)] - 2 * i + 1, 2);
    Rat b = make_rat(-2 * i + 1, 2);
    acc += pow(a, k) - pow(b, k);
  }
  return acc;
}

/// (1 - 2^{-k}) zeta(-k).
inline Rat zeta_shift_constant(int k) { return (Rat(1) - make_rat(1, ipow(2, k))) * zeta_neg(k); }

inline Rat p_star(int k, const Partition& lambda) { return p_shift(k, lambda) + zeta_shift_constant(k); }

/// f_mu(lambda) = C(|lambda|, |mu|) |C_mu| chi^lambda(mu^{up}) / dim(lambda).
inline Rat f_eval(const Partition& mu, const Partition& lambda) {
  if (mu.empty()) return 1;
  const int n = lambda.size();
  if (mu.size() > n) return 0;
  BigInt num = binomial(n, mu.size()) * class_size(mu) * mn_char(lambda, mu.padded_to(n));
  return make_rat(num, dim_irrep(lambda));
}

namespace detail {

/// Solves A x = b over Rat by Gaussian elimination. Throws internal_error
/// when A is singular.
inline std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  const size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw internal_error("singular system in completed-cycle solve");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace detail

/// kappa_{(k), mu} for all |mu| <= k, solved block by block in |mu|.
inline ClassVector kappa_coefficients(int k) {
  if (k < 1) throw std::invalid_argument("completed cycles need k >= 1");
  static detail::Memo<int, ClassVector> memo;
  return memo.get(k, [&] {
    ClassVector kappa;
    for (int n = 0; n <= k; ++n) {
      const auto block = partitions_of(n);
      const size_t sz = block.size();
      std::vector<std::vector<Rat>> a(sz, std::vector<Rat>(sz));
      std::vector<Rat> rhs(sz);
      for (size_t r = 0; r < sz; ++r) {
        const Partition& lambda = block[r];
        rhs[r] = p_shift(k, lambda);
        for (const auto& [mu, c] : kappa) rhs[r] -= c * f_eval(mu, lambda);
        for (size_t c = 0; c < sz; ++c) a[r][c] = f_eval(block[c], lambda);
      }
      auto x = detail::solve_linear(std::move(a), std::move(rhs));
      for (size_t c = 0; c < sz; ++c) kappa.add(block[c], x[c]);
    }
    return kappa;
  });
}

/// The completed k-cycle (1/k!) sum_mu kappa_{(k),mu} C_mu; when starred the
/// constant (1 - 2^{-k}) zeta(-k) / k! sits on the empty partition.
inline ClassVector completed_cycle(int k, bool starred = false) {
  ClassVector v = kappa_coefficients(k) * make_rat(1, factorial(k));
  if (starred) v.add(Partition{}, zeta_shift_constant(k) / Rat(factorial(k)));
  return v;
}

}  // namespace hurwitz
