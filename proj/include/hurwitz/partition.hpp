#pragma once

// Integer partitions: canonical storage, enumeration, class statistics and
// Young-diagram cell data.
//
// Cells are (row i, column j), 1-based, English convention. The content of
// a cell is j - i.

#include "hurwitz/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

class Partition {
 public:
  Partition() = default;

  /// Parts must already be weakly decreasing and positive.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts an arbitrary multiset of positive parts into canonical form.
  static Partition from_multiset(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](size_t i) const { return parts_[i]; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// m[i] = number of parts equal to i, for i = 0..largest().
  std::vector<int> multiplicities() const {
    std::vector<int> m(static_cast<size_t>(largest()) + 1, 0);
    for (int p : parts_) ++m[static_cast<size_t>(p)];
    return m;
  }

  int multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
  }

  Partition conjugate() const {
    std::vector<int> c(static_cast<size_t>(largest()), 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
    return Partition(std::move(c));
  }

  /// eta padded with 1s up to size d.
  Partition padded_to(int d) const {
    int n = size();
    if (n > d) throw std::invalid_argument("cannot pad a partition to a smaller size");
    std::vector<int> p = parts_;
    p.insert(p.end(), static_cast<size_t>(d - n), 1);
    return Partition(std::move(p));
  }

  /// Removes the first occurrence of a part.
  Partition without_part(int part) const {
    std::vector<int> p = parts_;
    auto it = std::find(p.begin(), p.end(), part);
    if (it == p.end()) throw std::invalid_argument("part not present");
    p.erase(it);
    return Partition(std::move(p));
  }

  Partition with_part(int part) const {
    std::vector<int> p = parts_;
    p.push_back(part);
    return from_multiset(std::move(p));
  }

  bool is_hook() const { return parts_.size() <= 1 || parts_[1] == 1; }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(parts_[i]);
    }
    return s + "]";
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Larger partitions first, then reverse lexicographic within a size. This is
/// the order of partitions_of and of every keyed output.
struct CanonicalOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.parts() > b.parts();
  }
};

/// Parses "[3,1,1]" or "[]"; whitespace around tokens is ignored.
inline Partition parse_partition(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("partition must be written as [a,b,...]: '" + std::string(text) + "'");
  std::string body = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (!body.empty()) {
    size_t start = 0;
    while (true) {
      size_t comma = body.find(',', start);
      std::string tok = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
        throw std::invalid_argument("malformed partition part '" + tok + "' in '" + std::string(text) + "'");
      parts.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(e.what()) + ": '" + std::string(text) + "'");
  }
}

/// The hook [1^j, d-j], i.e. (d-j, 1, ..., 1) with j ones.
inline Partition hook(int d, int j) {
  if (d < 1 || j < 0 || j > d - 1) throw std::invalid_argument("hook index out of range");
  std::vector<int> p{d - j};
  p.insert(p.end(), static_cast<size_t>(j), 1);
  return Partition(std::move(p));
}

/// theta_{i,d} = [1^{d-i}, i].
inline Partition theta(int i, int d) {
  if (i < 1 || i > d) throw std::invalid_argument("theta index out of range");
  return hook(d, d - i);
}

namespace detail {
inline void enumerate_partitions(int remaining, int bound, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, bound); p >= 1; --p) {
    cur.push_back(p);
    enumerate_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}
}  // namespace detail

/// All partitions of d in reverse lexicographic order: [d], [d-1,1], ..., [1^d].
inline std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw std::invalid_argument("partitions_of needs d >= 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::enumerate_partitions(d, d, cur, out);
  return out;
}

/// All partitions of sizes 0..max_size, in canonical order reversed by size
/// (smallest size first), reverse lexicographic within a size.
inline std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto ps = partitions_of(n);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

inline std::vector<Partition> partitions_with_length(int d, int n) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(d))
    if (p.length() == n) out.push_back(p);
  return out;
}

struct ClassStats {
  BigInt z;          // prod i^{m_i} m_i!
  BigInt aut;        // prod m_i!
  BigInt classsize;  // |lambda|! / z
};

inline ClassStats z_aut_classsize(const Partition& lambda) {
  ClassStats s{1, 1, 0};
  auto m = lambda.multiplicities();
  for (size_t i = 1; i < m.size(); ++i) {
    BigInt f = factorial(m[i]);
    s.aut *= f;
    s.z *= f * ipow(static_cast<long>(i), m[i]);
  }
  s.classsize = factorial(lambda.size()) / s.z;
  return s;
}

inline BigInt aut(const Partition& lambda) { return z_aut_classsize(lambda).aut; }
inline BigInt class_size(const Partition& lambda) { return z_aut_classsize(lambda).classsize; }

/// Hook length of cell (i, j), 1-based.
inline int hook_length(const Partition& lambda, int i, int j) {
  const auto& p = lambda.parts();
  int arm = p[static_cast<size_t>(i - 1)] - j;
  int leg = 0;
  for (size_t r = static_cast<size_t>(i); r < p.size() && p[r] >= j; ++r) ++leg;
  return arm + leg + 1;
}

inline BigInt hook_product(const Partition& lambda) {
  BigInt prod = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[static_cast<size_t>(i - 1)]; ++j) prod *= hook_length(lambda, i, j);
  return prod;
}

/// prod over cells u of (m + c(u)) / h(u).
inline Rat m_coeff(const Partition& lambda, long m) {
  Rat prod = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda[static_cast<size_t>(i - 1)]; ++j)
      prod *= make_rat(m + (j - i), hook_length(lambda, i, j));
  return prod;
}

/// sum_{k=0}^{m} (-1)^k C(m, k) m_coeff(lambda, m - k).
inline Rat c_coeff(const Partition& lambda, long m) {
  Rat acc = 0;
  for (long k = 0; k <= m; ++k) acc += Rat(sign_pow(k) * binomial(m, k)) * m_coeff(lambda, m - k);
  return acc;
}

}  // namespace hurwitz
