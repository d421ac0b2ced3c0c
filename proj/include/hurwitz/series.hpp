#pragma once

// Truncated multivariate power series over Rat.
//
// Every variable carries a cap: the largest exponent the series keeps.
// Products truncate to the smaller of the two caps per variable. Reading a
// coefficient past a cap throws, since the true value is unknown there.

#include "hurwitz/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

class TruncSeries {
 public:
  using Exponents = std::vector<int>;

  TruncSeries(std::vector<std::string> vars, std::vector<int> caps)
      : vars_(std::move(vars)), caps_(std::move(caps)) {
    if (vars_.size() != caps_.size()) throw std::invalid_argument("one cap per variable required");
    for (int c : caps_)
      if (c < 0) throw std::invalid_argument("negative series cap");
    for (size_t i = 0; i < vars_.size(); ++i)
      for (size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate series variable " + vars_[i]);
  }

  static TruncSeries constant(std::vector<std::string> vars, std::vector<int> caps, const Rat& c) {
    TruncSeries s(std::move(vars), std::move(caps));
    s.add_term(Exponents(s.vars_.size(), 0), c);
    return s;
  }

  /// The monomial c * var^e (zero if e exceeds the cap).
  static TruncSeries monomial(std::vector<std::string> vars, std::vector<int> caps,
                              const std::string& var, int e, const Rat& c = 1) {
    TruncSeries s(std::move(vars), std::move(caps));
    Exponents ex(s.vars_.size(), 0);
    ex[s.index_of(var)] = e;
    s.add_term(ex, c);
    return s;
  }

  TruncSeries zero_like() const { return TruncSeries(vars_, caps_); }
  TruncSeries constant_like(const Rat& c) const { return constant(vars_, caps_, c); }
  TruncSeries monomial_like(const std::string& var, int e, const Rat& c = 1) const {
    return monomial(vars_, caps_, var, e, c);
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& caps() const { return caps_; }
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  size_t index_of(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw std::invalid_argument("unknown series variable " + var);
    return static_cast<size_t>(it - vars_.begin());
  }

  int cap(const std::string& var) const { return caps_[index_of(var)]; }

  /// Adds c * x^e; terms beyond a cap are dropped (truncation).
  void add_term(const Exponents& e, const Rat& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw std::invalid_argument("negative exponent");
      if (e[i] > caps_[i]) return;
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rat coeff(const Exponents& e) const {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) return 0;
      if (e[i] > caps_[i])
        throw std::out_of_range("coefficient of " + vars_[i] + "^" + std::to_string(e[i]) +
                                " lies beyond the cap " + std::to_string(caps_[i]));
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Rat constant_term() const { return coeff(Exponents(vars_.size(), 0)); }

  TruncSeries& operator+=(const TruncSeries& o) {
    check_ring(o);
    for (size_t i = 0; i < caps_.size(); ++i) caps_[i] = std::min(caps_[i], o.caps_[i]);
    truncate_to_caps();
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) { return *this += (o * Rat(-1)); }
  TruncSeries& operator*=(const Rat& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const Rat& c) { return a *= c; }
  friend TruncSeries operator*(const Rat& c, TruncSeries a) { return a *= c; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_ring(b);
    std::vector<int> caps(a.caps_.size());
    for (size_t i = 0; i < caps.size(); ++i) caps[i] = std::min(a.caps_[i], b.caps_[i]);
    TruncSeries r(a.vars_, caps);
    Exponents e(caps.size());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        bool fits = true;
        for (size_t i = 0; i < e.size(); ++i) {
          e[i] = ea[i] + eb[i];
          if (e[i] > caps[i]) {
            fits = false;
            break;
          }
        }
        if (fits) r.add_term(e, Rat(ca * cb));
      }
    }
    return r;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.vars_ == b.vars_ && a.caps_ == b.caps_ && a.terms_ == b.terms_;
  }

  TruncSeries pow(unsigned n) const {
    TruncSeries r = constant_like(1);
    TruncSeries b = *this;
    while (n > 0) {
      if (n & 1u) r *= b;
      n >>= 1;
      if (n > 0) b *= b;
    }
    return r;
  }

  /// exp(f) for f with zero constant term; the power sum terminates because
  /// every term of f^k has total degree at least k.
  TruncSeries exp() const {
    if (constant_term() != 0) throw std::domain_error("exp needs a series without constant term");
    TruncSeries result = constant_like(1);
    TruncSeries power = constant_like(1);
    for (long k = 1; !power.is_zero(); ++k) {
      power = power * *this;
      power *= make_rat(1, k);
      result += power;
    }
    return result;
  }

  /// log(f) for f with constant term 1.
  TruncSeries log() const {
    if (constant_term() != 1) throw std::domain_error("log needs a series with constant term 1");
    TruncSeries u = *this - constant_like(1);
    TruncSeries result = zero_like();
    TruncSeries power = constant_like(1);
    for (long k = 1;; ++k) {
      power = power * u;
      if (power.is_zero()) break;
      result += power * make_rat(sign_pow(k + 1), k);
    }
    return result;
  }

  TruncSeries derivative(const std::string& var) const {
    size_t v = index_of(var);
    TruncSeries r(vars_, caps_);
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      Exponents f = e;
      f[v] -= 1;
      r.add_term(f, Rat(c * e[v]));
    }
    return r;
  }

  /// The coefficient of var^e, as a series in the same ring with var absent.
  TruncSeries coefficient_in(const std::string& var, int e) const {
    size_t v = index_of(var);
    if (e > caps_[v]) throw std::out_of_range("slice of " + var + " beyond its cap");
    TruncSeries r(vars_, caps_);
    for (const auto& [ex, c] : terms_) {
      if (ex[v] != e) continue;
      Exponents f = ex;
      f[v] = 0;
      r.add_term(f, c);
    }
    return r;
  }

  /// Substitutes var = value. Exact only when the series is a polynomial in
  /// var whose degree stays below the cap; the caller guarantees that.
  TruncSeries evaluate(const std::string& var, const Rat& value) const {
    size_t v = index_of(var);
    TruncSeries r(vars_, caps_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f[v] = 0;
      r.add_term(f, Rat(c * hurwitz::pow(value, e[v])));
    }
    return r;
  }

  int degree_in(const std::string& var) const {
    size_t v = index_of(var);
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
  }

  /// Multiplies by var^k, truncating at the cap.
  TruncSeries shifted(const std::string& var, int k) const {
    size_t v = index_of(var);
    TruncSeries r(vars_, caps_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f[v] += k;
      r.add_term(f, c);
    }
    return r;
  }

 private:
  void check_ring(const TruncSeries& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("series live in different rings");
  }
  void truncate_to_caps() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      bool keep = true;
      for (size_t i = 0; i < caps_.size(); ++i)
        if (it->first[i] > caps_[i]) keep = false;
      it = keep ? std::next(it) : terms_.erase(it);
    }
  }

  std::vector<std::string> vars_;
  std::vector<int> caps_;
  std::map<Exponents, Rat> terms_;
};

/// Exact division of a polynomial in var by (var - root), where root does
/// not involve var. Throws internal_error on a nonzero remainder.
inline TruncSeries divide_by_linear(const TruncSeries& p, const std::string& var, const TruncSeries& root) {
  if (root.degree_in(var) > 0) throw std::invalid_argument("root must not involve the division variable");
  int n = p.degree_in(var);
  if (n < 0) return p.zero_like();
  // Synthetic division from the top: q_{i-1} = p_i + root * q_i.
  TruncSeries quotient = p.zero_like();
  TruncSeries carry = p.zero_like();
  for (int i = n; i >= 1; --i) {
    carry = p.coefficient_in(var, i) + root * carry;
    quotient += carry.shifted(var, i - 1);
  }
  TruncSeries remainder = p.coefficient_in(var, 0) + root * carry;
  if (!remainder.is_zero()) throw internal_error("division by a linear factor left a nonzero remainder");
  return quotient;
}

}  // namespace hurwitz
