#pragma once

// Exact polynomial fits of one-part Hurwitz numbers.
//
// Double numbers H_{d,d}(K; (d), beta) Aut(beta) d are fitted on an integer
// tensor grid by Newton interpolation and validated off the grid. Triple
// numbers live on bounded simplices and are fitted by the least total degree
// that interpolates every lattice point.

#include "hurwitz/decomposition.hpp"
#include "hurwitz/hurwitz_numbers.hpp"
#include "hurwitz/memo.hpp"
#include "hurwitz/numbers.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

namespace hurwitz {

class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exponents, Rat>& terms() const { return terms_; }
  size_t nvars() const { return vars_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rat& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity does not match variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rat coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  /// Largest total degree; -1 for the zero polynomial.
  int degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
    return best;
  }
  /// Smallest total degree; -1 for the zero polynomial.
  int min_degree() const {
    if (terms_.empty()) return -1;
    int best = std::numeric_limits<int>::max();
    for (const auto& [e, c] : terms_) best = std::min(best, std::accumulate(e.begin(), e.end(), 0));
    return best;
  }
  std::vector<int> support_degrees() const {
    std::vector<int> out;
    for (const auto& [e, c] : terms_) out.push_back(std::accumulate(e.begin(), e.end(), 0));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Rat evaluate(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point has wrong arity");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
      Rat t = c;
      for (size_t i = 0; i < e.size(); ++i) t *= pow(point[i], e[i]);
      total += t;
    }
    return total;
  }

  /// Invariance under every transposition of variables.
  bool is_symmetric() const {
    for (size_t i = 0; i + 1 < vars_.size(); ++i) {
      for (const auto& [e, c] : terms_) {
        Exponents f = e;
        std::swap(f[i], f[i + 1]);
        if (coeff(f) != c) return false;
      }
    }
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += "(" + hurwitz::to_string(it->second) + ")";
      for (size_t i = 0; i < it->first.size(); ++i)
        if (it->first[i] > 0) out += "*" + vars_[i] + (it->first[i] > 1 ? "^" + std::to_string(it->first[i]) : "");
    }
    return out;
  }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  std::vector<std::string> vars_;
  std::map<Exponents, Rat> terms_;
};

namespace detail {

/// Runs body(i) for i in [0, n) on up to `jobs` threads.
inline void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& body) {
  const size_t workers = std::min(static_cast<size_t>(std::max(jobs, 1)), std::max<size_t>(n, 1));
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

/// Monomial coefficients of prod_{t=0}^{i-1} (x - (t + 1)).
inline std::vector<Rat> newton_basis_poly(int i) {
  std::vector<Rat> p{Rat(1)};
  for (int t = 0; t < i; ++t) {
    std::vector<Rat> q(p.size() + 1, Rat(0));
    for (size_t e = 0; e < p.size(); ++e) {
      q[e + 1] += p[e];
      q[e] -= Rat(t + 1) * p[e];
    }
    p = std::move(q);
  }
  return p;
}

inline std::vector<int> unflatten(size_t flat, int radius, size_t n) {
  std::vector<int> idx(n);
  for (size_t a = n; a-- > 0;) {
    idx[a] = static_cast<int>(flat % static_cast<size_t>(radius));
    flat /= static_cast<size_t>(radius);
  }
  return idx;
}

}  // namespace detail

/// Tensor-grid Newton interpolation of f on [1, radius]^n. The result has
/// degree at most radius - 1 in each variable.
inline MultiPoly newton_fit(const std::function<Rat(const std::vector<int>&)>& f, size_t n, int radius,
                            const std::vector<std::string>& vars, int jobs = 1) {
  if (radius < 1) throw std::invalid_argument("grid radius must be positive");
  size_t total = 1;
  for (size_t a = 0; a < n; ++a) total *= static_cast<size_t>(radius);
  std::vector<Rat> c(total);
  detail::parallel_for(total, jobs, [&](size_t flat) {
    auto idx = detail::unflatten(flat, radius, n);
    for (auto& v : idx) ++v;
    c[flat] = f(idx);
  });
  // Divided differences along each axis; nodes are 1..radius, spacing 1.
  size_t stride = 1;
  for (size_t a = n; a-- > 0;) {
    for (size_t base = 0; base < total; ++base) {
      if ((base / stride) % static_cast<size_t>(radius) != 0) continue;
      for (int j = 1; j < radius; ++j)
        for (int i = radius - 1; i >= j; --i) {
          Rat& hi = c[base + static_cast<size_t>(i) * stride];
          const Rat& lo = c[base + static_cast<size_t>(i - 1) * stride];
          hi = (hi - lo) / Rat(j);
        }
    }
    stride *= static_cast<size_t>(radius);
  }
  std::vector<std::vector<Rat>> basis;
  for (int i = 0; i < radius; ++i) basis.push_back(detail::newton_basis_poly(i));
  MultiPoly poly(vars);
  for (size_t flat = 0; flat < total; ++flat) {
    if (c[flat] == 0) continue;
    auto idx = detail::unflatten(flat, radius, n);
    // Expand prod_a basis[idx[a]](x_a).
    std::vector<std::pair<MultiPoly::Exponents, Rat>> acc{{MultiPoly::Exponents(n, 0), c[flat]}};
    for (size_t a = 0; a < n; ++a) {
      std::vector<std::pair<MultiPoly::Exponents, Rat>> next;
      const auto& b = basis[static_cast<size_t>(idx[a])];
      for (const auto& [e, v] : acc)
        for (size_t p = 0; p < b.size(); ++p) {
          if (b[p] == 0) continue;
          auto f2 = e;
          f2[a] = static_cast<int>(p);
          next.emplace_back(f2, v * b[p]);
        }
      acc = std::move(next);
    }
    for (const auto& [e, v] : acc) poly.add_term(e, v);
  }
  return poly;
}

inline std::vector<std::string> beta_vars(size_t n) {
  std::vector<std::string> v;
  for (size_t i = 1; i <= n; ++i) v.push_back("b" + std::to_string(i));
  return v;
}

/// H_{|beta|,|beta|}(K; (|beta|), beta) Aut(beta) |beta| at an ordered tuple.
inline Rat double_value(const Partition& K, const std::vector<int>& beta) {
  const Partition p = Partition::from_multiset(beta);
  const int d = p.size();
  return h_double_onepart(d, K, p) * Rat(aut(p)) * Rat(d);
}

struct DoubleFit {
  Partition K;
  int n = 0;
  int radius = 0;
  int lowest_claimed = 0;   // s
  int highest_claimed = 0;  // sum k - n + 1
  MultiPoly poly;
  bool symmetric = false;
  bool within_window = false;
  bool parity_steps = false;  // support degrees all congruent to s mod 2
  size_t out_of_sample_points = 0;
  std::vector<std::pair<std::vector<int>, Rat>> counterexamples;  // point, direct value
};

/// Fits on [1, radius]^n (radius defaults to the degree bound + 1) and
/// checks every point of [1, 2 radius]^n outside the fitting grid.
inline DoubleFit fit_double_poly(const Partition& K, int n, int radius = 0, int jobs = 1, bool validate = true) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (K.empty()) throw std::invalid_argument("K must be non-empty");
  DoubleFit fit;
  fit.K = K;
  fit.n = n;
  fit.lowest_claimed = K.length();
  fit.highest_claimed = K.size() - n + 1;
  const int bound = std::max(fit.highest_claimed, 0);
  fit.radius = radius > 0 ? radius : bound + 1;
  if (fit.radius < bound + 1) throw std::invalid_argument("grid radius must exceed the degree bound");
  auto f = [&](const std::vector<int>& beta) { return double_value(K, beta); };
  fit.poly = newton_fit(f, static_cast<size_t>(n), fit.radius, beta_vars(static_cast<size_t>(n)), jobs);
  fit.symmetric = fit.poly.is_symmetric();
  const auto degs = fit.poly.support_degrees();
  fit.within_window = std::all_of(degs.begin(), degs.end(), [&](int g) { return g >= fit.lowest_claimed && g <= fit.highest_claimed; });
  fit.parity_steps = std::all_of(degs.begin(), degs.end(), [&](int g) { return (g - fit.lowest_claimed) % 2 == 0; });
  if (validate) {
    const int outer = 2 * fit.radius;
    size_t total = 1;
    for (int a = 0; a < n; ++a) total *= static_cast<size_t>(outer);
    std::vector<std::optional<std::pair<std::vector<int>, Rat>>> bad(total);
    std::vector<char> used(total, 0);
    detail::parallel_for(total, jobs, [&](size_t flat) {
      auto idx = detail::unflatten(flat, outer, static_cast<size_t>(n));
      bool inside = true;
      std::vector<Rat> pt;
      for (auto& v : idx) {
        ++v;
        if (v > fit.radius) inside = false;
        pt.emplace_back(v);
      }
      if (inside) return;
      used[flat] = 1;
      Rat direct = f(idx);
      if (fit.poly.evaluate(pt) != direct) bad[flat] = std::make_pair(idx, direct);
    });
    for (size_t i = 0; i < total; ++i) {
      fit.out_of_sample_points += used[i] ? 1 : 0;
      if (bad[i]) fit.counterexamples.push_back(*bad[i]);
    }
  }
  return fit;
}

// ---------------------------------------------------------------------------
// Lowest-degree coefficients.

struct WittenSymbol {
  std::vector<int> z;
  Partition K;
  int g = 0;
};

/// Builds the symbol, solving sum k = s + 2g + n - 1 for g.
inline WittenSymbol make_witten(const Partition& K, std::vector<int> z) {
  if (K.empty()) throw std::invalid_argument("K must be non-empty");
  if (z.empty()) throw std::invalid_argument("need at least one insertion");
  for (int v : z)
    if (v < 0) throw std::invalid_argument("insertion orders must be nonnegative");
  const int s = K.length();
  const int sum = std::accumulate(z.begin(), z.end(), 0);
  if (sum != s) throw std::invalid_argument("stratum mismatch: sum of insertions " + std::to_string(sum) + " != s = " + std::to_string(s));
  const int twice_g = K.size() - s - static_cast<int>(z.size()) + 1;
  if (twice_g < 0 || twice_g % 2 != 0)
    throw std::invalid_argument("no integral genus for K = " + K.to_string() + " with n = " + std::to_string(z.size()));
  return {std::move(z), K, twice_g / 2};
}

inline const MultiPoly& double_poly_cached(const Partition& K, int n, int jobs = 1) {
  static detail::Memo<std::pair<Partition, int>, std::shared_ptr<const MultiPoly>> memo;
  auto p = memo.get({K, n}, [&] { return std::make_shared<const MultiPoly>(fit_double_poly(K, n, 0, jobs, false).poly); });
  return *p;
}

/// (-1)^g [beta^z] H_{d,d}(K; (d), beta) Aut(beta) d.
inline Rat witten_lowest_coeff(const WittenSymbol& w, int jobs = 1) {
  const auto& poly = double_poly_cached(w.K, static_cast<int>(w.z.size()), jobs);
  return Rat(sign_pow(w.g)) * poly.coeff(w.z);
}

inline BigInt multinomial(const std::vector<int>& parts) {
  long total = 0;
  BigInt denom = 1;
  for (int p : parts) {
    total += p;
    denom *= factorial(p);
  }
  return factorial(total) / denom;
}

enum class ConstantForm {
  AsPrinted,  // prod ((i-1) b_i)! and the printed Bernoulli factor at every g
  General     // (sum (i-1) b_i)! and Hodge factor 1 at g = 0
};

/// Closed form for the lowest coefficients. The two forms coincide when K
/// has a single distinct part and g >= 1.
inline Rat lambda_g_constant(const Partition& K, int g, ConstantForm form = ConstantForm::AsPrinted) {
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
  auto b = K.multiplicities();
  Rat k_part = 1;
  long t = 0;
  for (size_t i = 1; i < b.size(); ++i) {
    if (b[i] == 0) continue;
    k_part *= Rat(ipow(static_cast<long>(i), b[i])) / pow(Rat(factorial(static_cast<long>(i))), b[i]);
    t += static_cast<long>(i - 1) * b[i];
    if (form == ConstantForm::AsPrinted) k_part *= Rat(factorial(static_cast<long>(i - 1) * b[i]));
  }
  if (form == ConstantForm::General) k_part *= Rat(factorial(t));
  Rat hodge;
  if (form == ConstantForm::General && g == 0) {
    hodge = 1;
  } else {
    const Rat two = pow(Rat(2), 2 * g - 1);
    hodge = (two - 1) / (two * Rat(factorial(2 * g))) * abs(bernoulli_number(2 * g));
  }
  return k_part * hodge;
}

// ---------------------------------------------------------------------------
// String and dilaton.

struct SymbolCheck {
  Partition K_aug;
  int x = 0;
  int g = 0;
  std::vector<int> lhs_z;
  Rat lhs;
  Rat rhs_symbols;      // the sum (string) or single symbol (dilaton), unscaled
  Rat prefactor;        // as printed, ((x-1)(b_x+1))_{x-1} / (x-1)!, times s+1 for dilaton
  Rat prefactor_general;  // (T + x - 1)_{x-1} / (x-1)!, T = sum (i-1) b_i of the base K
  bool holds = false;
  bool holds_general = false;
};

namespace detail {

inline std::pair<Rat, Rat> symbol_prefactors(const Partition& K, int x) {
  const long bx = K.multiplicity(x);
  long t = 0;
  for (int k : K.parts()) t += k - 1;
  Rat printed = Rat(falling_factorial(static_cast<long>(x - 1) * (bx + 1), x - 1)) / Rat(factorial(x - 1));
  Rat general = Rat(falling_factorial(t + x - 1, x - 1)) / Rat(factorial(x - 1));
  return {printed, general};
}

}  // namespace detail

/// String equation. K_aug carries the extra part x; z has sum s + 1 where s
/// is the length of K = K_aug minus x. Each right-hand symbol lowers one z_i
/// by 1 so that it stays in its lowest stratum.
inline SymbolCheck check_string(const Partition& K_aug, const std::vector<int>& z, int x, int jobs = 1) {
  if (x < 1) throw std::invalid_argument("x must be positive");
  if (K_aug.multiplicity(x) < 1) throw std::invalid_argument("K_aug has no part " + std::to_string(x));
  const Partition K = K_aug.without_part(x);
  if (K.empty()) throw std::invalid_argument("K_aug minus x must be non-empty");
  SymbolCheck c;
  c.K_aug = K_aug;
  c.x = x;
  c.lhs_z.assign(static_cast<size_t>(x - 1), 0);
  c.lhs_z.insert(c.lhs_z.end(), z.begin(), z.end());
  WittenSymbol lhs = make_witten(K_aug, c.lhs_z);
  c.g = lhs.g;
  c.lhs = witten_lowest_coeff(lhs, jobs);
  c.rhs_symbols = 0;
  for (size_t i = 0; i < z.size(); ++i) {
    if (z[i] == 0) continue;
    auto zi = z;
    --zi[i];
    WittenSymbol r = make_witten(K, zi);
    if (r.g != c.g) throw internal_error("string equation changed the genus");
    c.rhs_symbols += witten_lowest_coeff(r, jobs);
  }
  std::tie(c.prefactor, c.prefactor_general) = detail::symbol_prefactors(K, x);
  c.holds = c.lhs == c.prefactor * c.rhs_symbols;
  c.holds_general = c.lhs == c.prefactor_general * c.rhs_symbols;
  return c;
}

/// Dilaton equation: tau_0^{x-2} tau_1 inserted; z has sum s.
inline SymbolCheck check_dilaton(const Partition& K_aug, const std::vector<int>& z, int x, int jobs = 1) {
  if (x < 2) throw std::invalid_argument("dilaton needs x >= 2");
  if (K_aug.multiplicity(x) < 1) throw std::invalid_argument("K_aug has no part " + std::to_string(x));
  const Partition K = K_aug.without_part(x);
  if (K.empty()) throw std::invalid_argument("K_aug minus x must be non-empty");
  SymbolCheck c;
  c.K_aug = K_aug;
  c.x = x;
  c.lhs_z.assign(static_cast<size_t>(x - 2), 0);
  c.lhs_z.push_back(1);
  c.lhs_z.insert(c.lhs_z.end(), z.begin(), z.end());
  WittenSymbol lhs = make_witten(K_aug, c.lhs_z);
  c.g = lhs.g;
  c.lhs = witten_lowest_coeff(lhs, jobs);
  WittenSymbol r = make_witten(K, z);
  if (r.g != c.g) throw internal_error("dilaton equation changed the genus");
  c.rhs_symbols = witten_lowest_coeff(r, jobs);
  auto [printed, general] = detail::symbol_prefactors(K, x);
  const Rat s1 = Rat(K.length() + 1);
  c.prefactor = s1 * printed;
  c.prefactor_general = s1 * general;
  c.holds = c.lhs == c.prefactor * c.rhs_symbols;
  c.holds_general = c.lhs == c.prefactor_general * c.rhs_symbols;
  return c;
}

struct SymbolInstance {
  Partition K_aug;
  std::vector<int> z;
  int x = 0;
};

namespace detail {

inline void weak_compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    weak_compositions(total - v, parts - 1, cur, out);
    cur.pop_back();
  }
}

/// Every (K_aug, z, x) with |K_aug| <= max_size and n <= max_n for which
/// all symbols involved are in their lowest stratum. The string case uses
/// sum z = s + 1; the dilaton case sum z = s and x >= 2.
inline std::vector<SymbolInstance> symbol_instances(int max_size, int max_n, bool dilaton) {
  std::vector<SymbolInstance> out;
  for (const auto& K_aug : partitions_up_to(max_size)) {
    auto mult = K_aug.multiplicities();
    for (int x = dilaton ? 2 : 1; x < static_cast<int>(mult.size()); ++x) {
      if (mult[static_cast<size_t>(x)] == 0) continue;
      const Partition K = K_aug.without_part(x);
      if (K.empty()) continue;
      const int s = K.length();
      for (int n = 1; n <= max_n; ++n) {
        const int twice_g = K.size() - s - n + 1;
        if (twice_g < 0 || twice_g % 2 != 0) continue;
        std::vector<std::vector<int>> zs;
        std::vector<int> cur;
        weak_compositions(dilaton ? s : s + 1, n, cur, zs);
        for (auto& z : zs) out.push_back({K_aug, z, x});
      }
    }
  }
  return out;
}

}  // namespace detail

inline std::vector<SymbolInstance> string_instances(int max_size, int max_n) { return detail::symbol_instances(max_size, max_n, false); }
inline std::vector<SymbolInstance> dilaton_instances(int max_size, int max_n) { return detail::symbol_instances(max_size, max_n, true); }

// ---------------------------------------------------------------------------
// Triple numbers on simplices.

struct SimplexFit {
  std::vector<std::string> vars;
  size_t points = 0;
  int min_degree = -1;  // least total degree that interpolates; -1 if all values vanish
  int bound = 0;
  bool within_bound = false;
  MultiPoly poly;       // one interpolant of that degree
};

namespace detail {

inline void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int v = 1; v <= total - (parts - 1); ++v) {
    cur.push_back(v);
    compositions(total - v, parts - 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (parts >= 1) compositions(total, parts, cur, out);
  return out;
}

inline void monomials_up_to(size_t nvars, int degree, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    cur.push_back(e);
    monomials_up_to(nvars, degree - e, cur, out);
    cur.pop_back();
  }
}

/// Solves A c = b by elimination; nullopt when inconsistent. Free unknowns
/// are set to zero.
inline std::optional<std::vector<Rat>> solve_consistent(std::vector<std::vector<Rat>> a, std::vector<Rat> b, size_t cols) {
  const size_t rows = b.size();
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t p = r;
    while (p < rows && a[p][col] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    for (size_t q = 0; q < rows; ++q) {
      if (q == r || a[q][col] == 0) continue;
      Rat f = a[q][col] / a[r][col];
      for (size_t c = col; c < cols; ++c) a[q][c] -= f * a[r][c];
      b[q] -= f * b[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (size_t q = r; q < rows; ++q)
    if (b[q] != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
  return x;
}

}  // namespace detail

/// Least-degree exact interpolant of (points, values) in nvars variables.
inline SimplexFit least_degree_fit(const std::vector<std::vector<int>>& points, const std::vector<Rat>& values,
                                   const std::vector<std::string>& vars) {
  SimplexFit fit;
  fit.vars = vars;
  fit.points = points.size();
  fit.poly = MultiPoly(vars);
  if (std::all_of(values.begin(), values.end(), [](const Rat& v) { return v == 0; })) return fit;
  for (int deg = 0;; ++deg) {
    std::vector<std::vector<int>> monos;
    std::vector<int> cur;
    detail::monomials_up_to(vars.size(), deg, cur, monos);
    std::vector<std::vector<Rat>> a;
    for (const auto& p : points) {
      std::vector<Rat> row;
      for (const auto& m : monos) {
        Rat v = 1;
        for (size_t i = 0; i < m.size(); ++i) v *= pow(Rat(p[i]), m[i]);
        row.push_back(v);
      }
      a.push_back(std::move(row));
    }
    auto sol = detail::solve_consistent(std::move(a), values, monos.size());
    if (sol) {
      fit.min_degree = deg;
      for (size_t i = 0; i < monos.size(); ++i) fit.poly.add_term(monos[i], (*sol)[i]);
      return fit;
    }
    if (monos.size() > 4 * points.size() + 64) throw internal_error("least-degree fit did not terminate");
  }
}

struct TripleFitReport {
  int d = 0;
  int m = 0;
  int n = 0;
  int dprime = 0;
  int s = 0;
  std::optional<Partition> K;  // set for the fixed-K fit
  Rat genus;                   // fixed-K only
  SimplexFit fit;
};

/// Fixed K: beta ranges over compositions of d into n parts; fits
/// H_{d,m}(K; (d), beta) d prod a_i! in beta_1..beta_{n-1}; bound 2g.
inline TripleFitReport fit_triple_poly_fixed(int d, int m, int n, const Partition& K) {
  if (d < 1 || m < 1 || m > d || n < 1 || n > d) throw std::invalid_argument("need 1 <= m <= d and 1 <= n <= d");
  TripleFitReport rep;
  rep.d = d;
  rep.m = m;
  rep.n = n;
  rep.dprime = K.size();
  rep.s = K.length();
  rep.K = K;
  std::vector<std::vector<int>> pts;
  std::vector<Rat> vals;
  for (auto& comp : detail::compositions(d, n)) {
    Partition beta = Partition::from_multiset(comp);
    BigInt amult = aut(beta);
    vals.push_back(h_onepart(d, m, K, beta) * Rat(d) * Rat(amult));
    pts.emplace_back(comp.begin(), comp.end() - 1);
  }
  HurwitzQuery q{d, m, K, {Partition{d}, partitions_with_length(d, n).front()}, false};
  rep.genus = quasi_genus(q);
  rep.fit = least_degree_fit(pts, vals, beta_vars(static_cast<size_t>(n - 1)));
  const Rat twice_g = Rat(2) * rep.genus;
  rep.fit.bound = twice_g >= 0 ? static_cast<int>(twice_g.get_num().get_si()) : -1;
  rep.fit.within_bound = rep.fit.min_degree <= rep.fit.bound;
  return rep;
}

/// Joint fit of H-tilde = H prod k_i! over compositions K of d' into s parts
/// and beta of d into n parts, in k_1..k_{s-1}, beta_1..beta_{n-1}; bound d + d'.
inline TripleFitReport fit_triple_poly_joint(int d, int m, int n, int dprime, int s) {
  if (d < 1 || m < 1 || m > d || n < 1 || n > d) throw std::invalid_argument("need 1 <= m <= d and 1 <= n <= d");
  if (s < 1 || s > dprime) throw std::invalid_argument("need 1 <= s <= d'");
  TripleFitReport rep;
  rep.d = d;
  rep.m = m;
  rep.n = n;
  rep.dprime = dprime;
  rep.s = s;
  std::vector<std::vector<int>> pts;
  std::vector<Rat> vals;
  for (auto& kc : detail::compositions(dprime, s)) {
    Partition K = Partition::from_multiset(kc);
    BigInt kf = 1;
    for (int k : kc) kf *= factorial(k);
    for (auto& bc : detail::compositions(d, n)) {
      Partition beta = Partition::from_multiset(bc);
      vals.push_back(h_onepart(d, m, K, beta) * Rat(kf));
      std::vector<int> p(kc.begin(), kc.end() - 1);
      p.insert(p.end(), bc.begin(), bc.end() - 1);
      pts.push_back(std::move(p));
    }
  }
  std::vector<std::string> vars;
  for (int i = 1; i < s; ++i) vars.push_back("k" + std::to_string(i));
  for (const auto& v : beta_vars(static_cast<size_t>(n - 1))) vars.push_back(v);
  rep.fit = least_degree_fit(pts, vals, vars);
  rep.fit.bound = d + dprime;
  rep.fit.within_bound = rep.fit.min_degree <= rep.fit.bound;
  return rep;
}

}  // namespace hurwitz
