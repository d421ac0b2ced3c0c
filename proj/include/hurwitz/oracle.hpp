#pragma once

// Brute-force ground truth over explicit permutations.
//
// Products apply the right factor first: (a * b)(x) = a(b(x)). Class
// functions on S_d are dense vectors indexed by the lexicographic rank of
// each permutation. Nothing here touches the character machinery.

#include "hurwitz/memo.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/shifted.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz::oracle {

inline constexpr int kDefaultCap = 6;
inline constexpr int kMaxCap = 7;

class cap_exceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void check_cap(int d, int cap) {
  if (cap > kMaxCap) throw std::invalid_argument("oracle cap cannot exceed " + std::to_string(kMaxCap));
  if (d < 1) throw std::invalid_argument("oracle needs d >= 1");
  if (d > cap) throw cap_exceeded("degree " + std::to_string(d) + " exceeds the oracle cap " + std::to_string(cap));
}

class Perm {
 public:
  explicit Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      if (x < 0 || x >= static_cast<int>(images_.size()) || seen[static_cast<size_t>(x)])
        throw std::invalid_argument("not a bijection");
      seen[static_cast<size_t>(x)] = true;
    }
  }

  static Perm identity(int d) {
    std::vector<int> v(static_cast<size_t>(d));
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
  }

  /// Builds a permutation of {0..d-1} from disjoint cycles.
  static Perm from_cycles(int d, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> v(static_cast<size_t>(d));
    std::iota(v.begin(), v.end(), 0);
    for (const auto& c : cycles)
      for (size_t i = 0; i < c.size(); ++i) v[static_cast<size_t>(c[i])] = c[(i + 1) % c.size()];
    return Perm(std::move(v));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  friend Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in composition");
    std::vector<int> v(a.images_.size());
    for (size_t x = 0; x < v.size(); ++x) v[x] = a.images_[static_cast<size_t>(b.images_[x])];
    return Perm(std::move(v));
  }

  Perm inverse() const {
    std::vector<int> v(images_.size());
    for (size_t x = 0; x < v.size(); ++x) v[static_cast<size_t>(images_[x])] = static_cast<int>(x);
    return Perm(std::move(v));
  }

  Partition cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lens;
    for (size_t s = 0; s < images_.size(); ++s) {
      if (seen[s]) continue;
      int len = 0;
      for (size_t x = s; !seen[x]; x = static_cast<size_t>(images_[x])) {
        seen[x] = true;
        ++len;
      }
      lens.push_back(len);
    }
    return Partition::from_multiset(std::move(lens));
  }

  int num_cycles() const { return cycle_type().length(); }

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

/// Lexicographic rank of a permutation (Lehmer code).
inline size_t perm_rank(const std::vector<int>& v) {
  const size_t n = v.size();
  size_t rank = 0;
  for (size_t i = 0; i < n; ++i) {
    size_t smaller = 0;
    for (size_t j = i + 1; j < n; ++j)
      if (v[j] < v[i]) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

/// All of S_d with cached products, cycle counts and cycle types.
class SymmetricGroup {
 public:
  explicit SymmetricGroup(int d) : d_(d) {
    std::vector<int> v(static_cast<size_t>(d));
    std::iota(v.begin(), v.end(), 0);
    do {
      elements_.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    for (const auto& p : elements_) {
      types_.push_back(p.cycle_type());
      cycles_.push_back(types_.back().length());
    }
    if (d <= kDefaultCap) {
      const size_t n = elements_.size();
      table_.resize(n * n);
      for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
          table_[a * n + b] = static_cast<uint16_t>(perm_rank((elements_[a] * elements_[b]).images()));
    }
  }

  int degree() const { return d_; }
  size_t order() const { return elements_.size(); }
  const Perm& element(size_t i) const { return elements_[i]; }
  const Partition& type(size_t i) const { return types_[i]; }
  int cycles(size_t i) const { return cycles_[i]; }
  size_t identity_index() const { return 0; }
  size_t index_of(const Perm& p) const { return perm_rank(p.images()); }

  size_t product(size_t a, size_t b) const {
    if (!table_.empty()) return table_[a * elements_.size() + b];
    return perm_rank((elements_[a] * elements_[b]).images());
  }

  std::vector<size_t> members(const Partition& type) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < elements_.size(); ++i)
      if (types_[i] == type) out.push_back(i);
    return out;
  }

 private:
  int d_;
  std::vector<Perm> elements_;
  std::vector<Partition> types_;
  std::vector<int> cycles_;
  std::vector<uint16_t> table_;
};

inline const SymmetricGroup& symmetric_group(int d) {
  static std::mutex mutex;
  static std::vector<std::unique_ptr<SymmetricGroup>> groups(kMaxCap + 1);
  std::lock_guard lock(mutex);
  auto& slot = groups[static_cast<size_t>(d)];
  if (!slot) slot = std::make_unique<SymmetricGroup>(d);
  return *slot;
}

using Count = unsigned __int128;

inline BigInt to_bigint(Count c) {
  BigInt hi = static_cast<unsigned long>(static_cast<uint64_t>(c >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<uint64_t>(c));
  return hi * ipow(2, 64) + lo;
}

/// out[a * b] += f[a] * g[b], for a sparse right factor g.
template <typename Scalar>
std::vector<Scalar> convolve(const SymmetricGroup& g, const std::vector<Scalar>& f,
                             const std::vector<std::pair<size_t, Scalar>>& right) {
  std::vector<Scalar> out(g.order(), Scalar(0));
  for (size_t a = 0; a < g.order(); ++a) {
    if (f[a] == Scalar(0)) continue;
    for (const auto& [b, w] : right) out[g.product(a, b)] += f[a] * w;
  }
  return out;
}

template <typename Scalar>
std::vector<std::pair<size_t, Scalar>> sparse_indicator(const SymmetricGroup& g, const Partition& type) {
  std::vector<std::pair<size_t, Scalar>> out;
  for (size_t i : g.members(type)) out.emplace_back(i, Scalar(1));
  return out;
}

template <typename Scalar>
std::vector<Scalar> dense(const SymmetricGroup& g, const std::vector<std::pair<size_t, Scalar>>& sparse) {
  std::vector<Scalar> out(g.order(), Scalar(0));
  for (const auto& [i, w] : sparse) out[i] += w;
  return out;
}

/// Frequency vector of sigma_1 ... sigma_t over sigma_i in C_i.
inline std::vector<Count> product_counts(const SymmetricGroup& g, const std::vector<Partition>& classes) {
  std::vector<Count> f(g.order(), 0);
  f[g.identity_index()] = 1;
  for (const auto& c : classes) f = convolve<Count>(g, f, sparse_indicator<Count>(g, c));
  return f;
}

inline void check_classes(int d, const std::vector<Partition>& classes) {
  for (const auto& c : classes)
    if (c.size() != d) throw std::invalid_argument("class " + c.to_string() + " is not a partition of " + std::to_string(d));
}

/// Number of tuples sigma_i in C_i whose product has exactly m cycles.
inline BigInt xi_count(int d, int m, const std::vector<Partition>& classes, int cap = kDefaultCap) {
  check_cap(d, cap);
  check_classes(d, classes);
  const auto& g = symmetric_group(d);
  auto f = product_counts(g, classes);
  Count total = 0;
  for (size_t i = 0; i < g.order(); ++i)
    if (g.cycles(i) == m) total += f[i];
  return to_bigint(total);
}

/// Number of tuples sigma_i in C_i with sigma_1 ... sigma_k = 1.
inline BigInt frobenius_count(const std::vector<Partition>& classes, int cap = kDefaultCap) {
  if (classes.empty()) throw std::invalid_argument("frobenius_count needs at least one class");
  const int d = classes.front().size();
  check_cap(d, cap);
  check_classes(d, classes);
  const auto& g = symmetric_group(d);
  return to_bigint(product_counts(g, classes)[g.identity_index()]);
}

/// Factorizations of a fixed d-cycle into d - 1 transpositions.
inline BigInt single_hurwitz_check(int d, int cap = kDefaultCap) {
  check_cap(d, cap);
  const auto& g = symmetric_group(d);
  std::vector<Partition> classes;
  if (d >= 2) classes.assign(static_cast<size_t>(d - 1), Partition{2}.padded_to(d));
  auto f = product_counts(g, classes);
  std::vector<int> cyc(static_cast<size_t>(d));
  std::iota(cyc.begin(), cyc.end(), 0);
  size_t target = g.index_of(Perm::from_cycles(d, {cyc}));
  return to_bigint(f[target]);
}

/// How a completed-cycle key eta is placed into S_d.
///
/// PartialPermutation counts each permutation of type eta^{up d} once per
/// choice of which of its fixed points belong to the support of eta, i.e.
/// with multiplicity C(m_1(eta^{up d}), m_1(eta)). This is the weighting under
/// which the class C_eta acts on V_lambda by f_eta(lambda). Padded uses
/// multiplicity 1, the literal reading of the tuple-count definition.
enum class Lift { PartialPermutation, Padded };

/// The completed k-cycle as a Rat-valued function on S_d.
inline std::vector<std::pair<size_t, Rat>> completed_cycle_function(const SymmetricGroup& g, int k, bool starred,
                                                                     Lift lift) {
  const int d = g.degree();
  std::vector<Rat> f(g.order(), Rat(0));
  for (const auto& [eta, coeff] : completed_cycle(k, starred)) {
    if (eta.size() > d) continue;
    const Partition up = eta.padded_to(d);
    Rat w = coeff;
    if (lift == Lift::PartialPermutation) w *= Rat(binomial(up.multiplicity(1), eta.multiplicity(1)));
    for (size_t i : g.members(up)) f[i] += w;
  }
  std::vector<std::pair<size_t, Rat>> out;
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) out.emplace_back(i, f[i]);
  return out;
}

struct Query {
  int d = 1;
  int m = 1;
  Partition K;
  std::vector<Partition> profiles;
  bool starred = false;
};

/// Weighted frequency vector of sigma_1 ... sigma_s pi_1 ... pi_r.
inline std::vector<Rat> weighted_products(const Query& q, Lift lift, int cap) {
  check_cap(q.d, cap);
  check_classes(q.d, q.profiles);
  if (q.K.size() > cap) throw cap_exceeded("completed-cycle orders exceed the oracle cap");
  const auto& g = symmetric_group(q.d);
  std::vector<Rat> f(g.order(), Rat(0));
  f[g.identity_index()] = 1;
  for (int k : q.K.parts()) f = convolve<Rat>(g, f, completed_cycle_function(g, k, q.starred, lift));
  for (const auto& mu : q.profiles) f = convolve<Rat>(g, f, sparse_indicator<Rat>(g, mu));
  return f;
}

/// Quasi number H_{d,m}: the weighted count of tuples whose product has
/// exactly m cycles, divided by d!.
inline Rat h_by_definition(const Query& q, Lift lift = Lift::PartialPermutation, int cap = kDefaultCap) {
  if (q.m < 1) throw std::invalid_argument("m must be positive");
  auto f = weighted_products(q, lift, cap);
  const auto& g = symmetric_group(q.d);
  Rat total = 0;
  for (size_t i = 0; i < g.order(); ++i)
    if (g.cycles(i) == q.m) total += f[i];
  return total / Rat(factorial(q.d));
}

/// The same quasi number summed over an explicit last profile mu with m
/// parts, each term requiring the full product to be the identity.
inline Rat h_by_definition_closed(const Query& q, Lift lift = Lift::PartialPermutation, int cap = kDefaultCap) {
  if (q.m < 1) throw std::invalid_argument("m must be positive");
  auto f = weighted_products(q, lift, cap);
  const auto& g = symmetric_group(q.d);
  Rat total = 0;
  for (const auto& mu : partitions_with_length(q.d, q.m)) {
    auto closed = convolve<Rat>(g, f, sparse_indicator<Rat>(g, mu));
    total += closed[g.identity_index()];
  }
  return total / Rat(factorial(q.d));
}

/// H_d with product equal to the identity (no quasi profile).
inline Rat h_full_by_definition(const Query& q, Lift lift = Lift::PartialPermutation, int cap = kDefaultCap) {
  auto f = weighted_products(q, lift, cap);
  const auto& g = symmetric_group(q.d);
  return f[g.identity_index()] / Rat(factorial(q.d));
}

}  // namespace hurwitz::oracle
