#pragma once

// Hurwitz numbers with completed cycles.
//
// W-bar numbers come from character sums; quasi numbers H_{d,m} follow by
// the alternating Stirling transform. The one-part case (first profile a
// full cycle) has three further routes: a hook-only character sum, a
// generating-function extraction and a Bernoulli-polynomial expression.

#include "hurwitz/characters.hpp"
#include "hurwitz/memo.hpp"
#include "hurwitz/numbers.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/shifted.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

struct HurwitzQuery {
  int d = 1;
  int m = 1;
  Partition K;
  std::vector<Partition> profiles;
  bool starred = false;

  void validate() const {
    if (d < 1) throw std::invalid_argument("d must be positive");
    if (m < 1) throw std::invalid_argument("m must be positive");
    for (const auto& mu : profiles)
      if (mu.size() != d)
        throw std::invalid_argument("profile " + mu.to_string() + " is not a partition of " + std::to_string(d));
  }

  friend bool operator==(const HurwitzQuery&, const HurwitzQuery&) = default;
};

/// Genus g solved from 2g - 2 + 2d = sum (k_i - 1) + sum (d - l(mu)) + (d - m).
/// Returned as a Rat since it may be a half-integer.
inline Rat quasi_genus(const HurwitzQuery& q) {
  long rhs = 0;
  for (int k : q.K.parts()) rhs += k - 1;
  for (const auto& mu : q.profiles) rhs += q.d - mu.length();
  rhs += q.d - q.m;
  return make_rat(rhs + 2 - 2 * q.d, 2);
}

inline bool parity_admissible(const HurwitzQuery& q) { return quasi_genus(q).get_den() == 1; }

namespace detail {

inline Rat p_product(const Partition& K, const Partition& lambda, bool starred) {
  Rat r = 1;
  for (int k : K.parts()) r *= (starred ? p_star(k, lambda) : p_shift(k, lambda)) / Rat(factorial(k));
  return r;
}

/// prod |C_mu| chi^lambda(mu) / dim^{r-1} times the completed-cycle factor.
inline Rat lambda_weight(const HurwitzQuery& q, const Partition& lambda) {
  Rat w = p_product(q.K, lambda, q.starred);
  if (w == 0) return 0;
  for (const auto& mu : q.profiles) w *= Rat(class_size(mu) * mn_char(lambda, mu));
  const BigInt dim = dim_irrep(lambda);
  const long r = static_cast<long>(q.profiles.size());
  w *= pow(Rat(dim), 1 - r);
  return w;
}

}  // namespace detail

/// W-bar_{d,q} for q = 1..d in one pass over lambda; entry 0 is unused.
inline std::vector<Rat> w_general_all(const HurwitzQuery& query) {
  query.validate();
  const int d = query.d;
  std::vector<Rat> w(static_cast<size_t>(d) + 1, Rat(0));
  const Rat dfact = Rat(factorial(d));
  for (const auto& lambda : partitions_of(d)) {
    Rat base = detail::lambda_weight(query, lambda);
    if (base == 0) continue;
    for (int q = 1; q <= d; ++q) w[static_cast<size_t>(q)] += c_coeff(lambda, q) * base;
  }
  for (int q = 1; q <= d; ++q) w[static_cast<size_t>(q)] /= dfact * Rat(factorial(q));
  return w;
}

inline Rat w_general(const HurwitzQuery& q) {
  q.validate();
  if (q.m > q.d) return 0;
  return w_general_all(q)[static_cast<size_t>(q.m)];
}

/// H_{d,m} = sum_k (-1)^k [m+k, m] W-bar_{d,m+k}.
inline Rat h_quasi_sum(const HurwitzQuery& q) {
  q.validate();
  if (q.m > q.d) return 0;
  auto w = w_general_all(q);
  Rat h = 0;
  for (int k = 0; k <= q.d - q.m; ++k)
    h += Rat(sign_pow(k) * stirling1_unsigned(q.m + k, q.m)) * w[static_cast<size_t>(q.m + k)];
  return h;
}

/// H_{d,m} = W-bar_{d,m} - sum_{k>m} S(k, m) H_{d,k}, run downward from m = d.
inline Rat h_quasi_recursive(const HurwitzQuery& q) {
  q.validate();
  if (q.m > q.d) return 0;
  auto w = w_general_all(q);
  std::vector<Rat> h(static_cast<size_t>(q.d) + 2, Rat(0));
  for (int m = q.d; m >= q.m; --m) {
    Rat v = w[static_cast<size_t>(m)];
    for (int k = m + 1; k <= q.d; ++k) v -= Rat(stirling2(k, m)) * h[static_cast<size_t>(k)];
    h[static_cast<size_t>(m)] = v;
  }
  return h[static_cast<size_t>(q.m)];
}

/// Both quasi routes; they must agree exactly.
inline Rat h_quasi(const HurwitzQuery& q) {
  Rat a = h_quasi_sum(q);
  Rat b = h_quasi_recursive(q);
  if (a != b) throw internal_error("Stirling sum and downward recursion disagree: " + to_string(a) + " vs " + to_string(b));
  return a;
}

/// H_d (product equal to the identity) by the character formula; starred
/// uses p*_k.
inline Rat h_full(int d, const Partition& K, const std::vector<Partition>& profiles, bool starred = false) {
  HurwitzQuery q{d, 1, K, profiles, starred};
  q.validate();
  const Rat dfact = Rat(factorial(d));
  Rat total = 0;
  for (const auto& lambda : partitions_of(d)) {
    Rat w = detail::p_product(K, lambda, starred);
    if (w == 0) continue;
    const Rat dim = Rat(dim_irrep(lambda));
    for (const auto& mu : profiles) w *= Rat(class_size(mu) * mn_char(lambda, mu)) / dim;
    total += w * dim * dim / (dfact * dfact);
  }
  return total;
}

namespace detail {

/// Sum over subsets of K-indices of prod (1 - 2^{-k}) zeta(-k) / k! times
/// eval(K with those entries removed).
template <typename Eval>
Rat star_expansion(const Partition& K, Eval&& eval) {
  const auto& parts = K.parts();
  const size_t s = parts.size();
  if (s > 20) throw std::invalid_argument("too many completed cycles");
  Rat total = 0;
  for (unsigned long mask = 0; mask < (1ul << s); ++mask) {
    Rat coeff = 1;
    std::vector<int> kept;
    for (size_t i = 0; i < s; ++i) {
      if (mask & (1ul << i))
        coeff *= zeta_shift_constant(parts[i]) / Rat(factorial(parts[i]));
      else
        kept.push_back(parts[i]);
    }
    if (coeff == 0) continue;
    total += coeff * eval(Partition(kept));
  }
  return total;
}

}  // namespace detail

/// Quasi H* by expanding each starred completed cycle into its unstarred
/// part plus the constant on the empty class.
inline Rat h_star(const HurwitzQuery& q) {
  q.validate();
  return detail::star_expansion(q.K, [&](const Partition& reduced) {
    HurwitzQuery r = q;
    r.K = reduced;
    r.starred = false;
    return h_quasi(r);
  });
}

/// Full H*_d by the subset expansion; must match h_full(..., true).
inline Rat h_full_star_expansion(int d, const Partition& K, const std::vector<Partition>& profiles) {
  return detail::star_expansion(K, [&](const Partition& reduced) { return h_full(d, reduced, profiles, false); });
}

struct GwSector {
  Rat value;
  Rat genus;
};

/// Stationary sector: H*_d at orders k_i + 1, with genus from the dimension
/// constraint 2g - 2 + 2d = sum k_i + sum (d - l(mu)).
inline GwSector gw_sector(int d, const std::vector<int>& k_gw, const std::vector<Partition>& profiles) {
  std::vector<int> orders;
  long rhs = 0;
  for (int k : k_gw) {
    if (k < 0) throw std::invalid_argument("descendant orders must be nonnegative");
    orders.push_back(k + 1);
    rhs += k;
  }
  for (const auto& mu : profiles) rhs += d - mu.length();
  const Partition K = Partition::from_multiset(orders);
  Rat value = h_full(d, K, profiles, true);
  Rat check = h_full_star_expansion(d, K, profiles);
  if (value != check) throw internal_error("p* character sum and subset expansion disagree");
  return {value, make_rat(rhs + 2 - 2 * d, 2)};
}

// ---------------------------------------------------------------------------
// Tuple-count W numbers and the xi recursion.

/// W_{d,m}(C_1..C_t) = prod |C_i| / m! sum_lambda c_{lambda,m} prod chi / dim^{t-1}.
inline Rat w_classes(int d, int m, const std::vector<Partition>& classes) {
  if (classes.empty()) throw std::invalid_argument("w_classes needs at least one class");
  Rat total = 0;
  for (const auto& lambda : partitions_of(d)) {
    Rat term = c_coeff(lambda, m);
    if (term == 0) continue;
    for (const auto& c : classes) term *= Rat(mn_char(lambda, c));
    term *= pow(Rat(dim_irrep(lambda)), 1 - static_cast<long>(classes.size()));
    total += term;
  }
  BigInt sizes = 1;
  for (const auto& c : classes) sizes *= class_size(c);
  return total * Rat(sizes) / Rat(factorial(m));
}

/// W_{d,m}(C_(d), C_1..C_t) through hook characters only.
inline Rat w_classes_full_cycle(int d, int m, const std::vector<Partition>& classes) {
  Rat total = 0;
  const long t = static_cast<long>(classes.size());
  for (int j = 0; j <= d - 1; ++j) {
    Rat term = Rat(sign_pow(j) * binomial(d - 1 - j, d - m));
    if (term == 0) continue;
    term *= pow(Rat(binomial(d - 1, j)), 1 - t);
    for (const auto& c : classes) term *= Rat(hook_char_row(c)[static_cast<size_t>(j)]);
    total += term;
  }
  BigInt sizes = factorial(d - 1);
  for (const auto& c : classes) sizes *= class_size(c);
  return total * Rat(sizes) / Rat(factorial(m));
}

/// xi_{d,m} by the alternating Stirling sum over W.
inline Rat xi_from_w_sum(int d, int m, const std::vector<Partition>& classes) {
  Rat total = 0;
  for (int k = 0; k <= d - m; ++k) total += Rat(sign_pow(k) * stirling1_unsigned(m + k, m)) * w_classes(d, m + k, classes);
  return total;
}

/// xi_{d,m} by the downward recursion xi_m = W_m - sum_{k>m} S(k,m) xi_k.
inline Rat xi_from_w_recursion(int d, int m, const std::vector<Partition>& classes) {
  std::vector<Rat> xi(static_cast<size_t>(d) + 2, Rat(0));
  for (int j = d; j >= m; --j) {
    Rat v = w_classes(d, j, classes);
    for (int k = j + 1; k <= d; ++k) v -= Rat(stirling2(k, j)) * xi[static_cast<size_t>(k)];
    xi[static_cast<size_t>(j)] = v;
  }
  return xi[static_cast<size_t>(m)];
}

/// Frobenius character sum: prod |C_i| / d! sum_lambda prod chi dim^{2-k}.
inline Rat frobenius_character_sum(const std::vector<Partition>& classes) {
  if (classes.empty()) throw std::invalid_argument("frobenius_character_sum needs at least one class");
  const int d = classes.front().size();
  Rat total = 0;
  for (const auto& lambda : partitions_of(d)) {
    Rat term = pow(Rat(dim_irrep(lambda)), 2 - static_cast<long>(classes.size()));
    for (const auto& c : classes) term *= Rat(mn_char(lambda, c));
    total += term;
  }
  BigInt sizes = 1;
  for (const auto& c : classes) sizes *= class_size(c);
  return total * Rat(sizes) / Rat(factorial(d));
}

// ---------------------------------------------------------------------------
// One-part numbers: first profile (d), second profile beta.

enum class Engine { CharacterSum, GeneratingFunction, Bernoulli };

inline const char* engine_name(Engine e) {
  switch (e) {
    case Engine::CharacterSum: return "character-sum";
    case Engine::GeneratingFunction: return "generating-function";
    case Engine::Bernoulli: return "bernoulli";
  }
  return "?";
}

namespace detail {

inline void check_onepart(int d, const Partition& beta) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (beta.size() != d) throw std::invalid_argument("beta " + beta.to_string() + " is not a partition of " + std::to_string(d));
}

/// prod_i b_i! / (i!)^{b_i}.
inline Rat k_multiplicity_factor(const Partition& K) {
  Rat r = 1;
  auto b = K.multiplicities();
  for (size_t i = 1; i < b.size(); ++i)
    r *= Rat(factorial(b[i])) / Rat(ipow(static_cast<long>(factorial(static_cast<long>(i)).get_si()), b[i]));
  return r;
}

/// Largest t in the extraction: sum (i - 1) b_i = d' - s.
inline int t_range(const Partition& K) { return K.size() - K.length(); }

/// u_t = [t_1^{b_1} ... t_l^{b_l} z^t] U(t; z) for t = 0..t_range(K).
inline std::vector<Rat> u_coefficients(const Partition& K) {
  static Memo<Partition, std::vector<Rat>> memo;
  return memo.get(K, [&] {
    const int T = t_range(K);
    const int l = K.largest();
    auto b = K.multiplicities();
    std::vector<std::string> vars;
    std::vector<int> caps;
    for (int i = 1; i <= l; ++i) {
      vars.push_back("t" + std::to_string(i));
      caps.push_back(b[static_cast<size_t>(i)]);
    }
    vars.push_back("z");
    caps.push_back(T);
    TruncSeries expo(vars, caps);
    for (int i = 1; i <= l; ++i) {
      std::vector<int> e(vars.size(), 0);
      e[static_cast<size_t>(i - 1)] = 1;
      for (int j = 0; j <= i - 1; ++j) {
        e.back() = j;
        expo.add_term(e, Rat(binomial(i, j)));
      }
    }
    TruncSeries u = expo.exp();
    TruncSeries slice = u;
    for (int i = 1; i <= l; ++i) slice = slice.coefficient_in("t" + std::to_string(i), b[static_cast<size_t>(i)]);
    std::vector<Rat> out(static_cast<size_t>(T) + 1);
    std::vector<int> e(vars.size(), 0);
    for (int t = 0; t <= T; ++t) {
      e.back() = t;
      out[static_cast<size_t>(t)] = slice.coeff(e);
    }
    return out;
  });
}

/// e^{-y/2} V_beta(x, y) = e^{-y/2} (x - e^{-y})^{-1} prod_v (x^v - e^{-yv})^{a_v}
/// in the ring {x, y}; the inverse factor is removed by exact division.
inline TruncSeries onepart_v_series(const Partition& beta, int ycap) {
  static Memo<std::pair<Partition, int>, TruncSeries> memo;
  return memo.get({beta, ycap}, [&] {
    const int d = beta.size();
    const std::vector<std::string> vars{"x", "y"};
    const std::vector<int> caps{d, ycap};
    auto exp_y = [&](const Rat& c) { return TruncSeries::monomial(vars, caps, "y", 1, c).exp(); };
    TruncSeries prod = TruncSeries::constant(vars, caps, 1);
    for (int v : beta.parts()) prod *= TruncSeries::monomial(vars, caps, "x", v) - exp_y(Rat(-v));
    TruncSeries quotient = divide_by_linear(prod, "x", exp_y(Rat(-1)));
    return quotient * exp_y(make_rat(-1, 2));
  });
}

/// [y^t] d^{order}/dx^{order} F(x, y) at x = 1, for t = 0..ycap.
inline std::vector<Rat> y_coefficients_after_derivative(const TruncSeries& f, int order, int ycap) {
  TruncSeries g = f;
  for (int i = 0; i < order; ++i) g = g.derivative("x");
  g = g.evaluate("x", 1);
  std::vector<Rat> out(static_cast<size_t>(ycap) + 1);
  for (int t = 0; t <= ycap; ++t) out[static_cast<size_t>(t)] = g.coeff({0, t});
  return out;
}

inline Rat w_onepart_character_sum(int d, int q, const Partition& K, const Partition& beta) {
  auto row = hook_char_row(beta);
  Rat sum = 0;
  for (int k = 0; k <= d - 1; ++k) {
    Rat ff = Rat(falling_factorial(static_cast<long>(d - k - 1), static_cast<long>(d - q)));
    if (ff == 0) continue;
    sum += p_product(K, hook(d, k), false) * Rat(sign_pow(k) * row[static_cast<size_t>(k)]) * ff;
  }
  Rat pre = Rat(factorial(q - 1) * class_size(beta) * binomial(d - 1, q - 1)) / Rat(factorial(q) * factorial(d));
  return pre * sum;
}

inline Rat w_onepart_generating_function(int d, int q, const Partition& K, const Partition& beta) {
  const int T = t_range(K);
  auto u = u_coefficients(K);
  auto v = y_coefficients_after_derivative(onepart_v_series(beta, T), d - q, T);
  Rat sum = 0;
  for (int t = 0; t <= T; ++t)
    sum += u[static_cast<size_t>(t)] * Rat(factorial(t)) / Rat(ipow(d, t)) * v[static_cast<size_t>(t)];
  const long dprime = K.size();
  Rat c = Rat(class_size(beta)) * pow(Rat(d), dprime - 1) / Rat(factorial(q) * factorial(d - q)) * k_multiplicity_factor(K);
  return c * sum;
}

/// The Bernoulli-polynomial expression, evaluated exactly as stated; it
/// returns W-bar after dividing out the d * Aut(beta) on its left side.
inline Rat w_onepart_bernoulli(int d, int m, const Partition& K, const Partition& beta) {
  const int T = t_range(K);
  const int n = beta.length();
  auto u = u_coefficients(K);
  const auto& parts = beta.parts();
  Rat outer = 0;
  for (int t = 0; t <= T; ++t) {
    if (u[static_cast<size_t>(t)] == 0) continue;
    Rat inner = 0;
    for (int r = 0; r <= d - m; ++r) {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int p = 0;
        long in_sum = 0, out_sum = 0;
        for (int i = 0; i < n; ++i) {
          if (mask & (1u << i)) {
            ++p;
            in_sum += parts[static_cast<size_t>(i)];
          } else {
            out_sum += parts[static_cast<size_t>(i)];
          }
        }
        BigInt bin = binomial(in_sum, d - m - r);
        if (bin == 0) continue;
        Rat term = Rat(sign_pow(n - p + 1 + t) * bin) / Rat(factorial(r + 1 + t));
        term *= bernoulli_poly_order(r + 1 + t, r + 1, make_rat(1, 2) + Rat(out_sum));
        inner += term;
      }
    }
    outer += u[static_cast<size_t>(t)] * Rat(factorial(t)) / Rat(ipow(d, t)) * inner;
  }
  BigInt prod_beta = 1;
  for (int b : parts) prod_beta *= b;
  Rat pre = Rat(factorial(d - m) * factorial(d)) * pow(Rat(d), K.size()) / Rat(factorial(m) * prod_beta) *
            k_multiplicity_factor(K);
  return pre * outer / Rat(BigInt(d) * aut(beta));
}

}  // namespace detail

/// W-bar_{d,q}(K; (d), beta).
inline Rat w_onepart(int d, int q, const Partition& K, const Partition& beta, Engine engine = Engine::CharacterSum) {
  detail::check_onepart(d, beta);
  if (q < 1) throw std::invalid_argument("q must be positive");
  if (q > d) return 0;
  switch (engine) {
    case Engine::CharacterSum: return detail::w_onepart_character_sum(d, q, K, beta);
    case Engine::GeneratingFunction: return detail::w_onepart_generating_function(d, q, K, beta);
    case Engine::Bernoulli: return detail::w_onepart_bernoulli(d, q, K, beta);
  }
  throw std::invalid_argument("unknown engine");
}

/// The standard-cycle closed form
/// |C_beta| d^{s-1} / (q! (d-q)!) d^{d-q}/dx^{d-q} [y^s] e^{(d-1)y/2} V_beta |_{x=1}.
/// Evaluated as written it equals W-bar_{d,q}([2^s]; (d), beta) / s!; the
/// extraction of [t_2^s] from U leaves a 1/h! that the closed form drops.
inline Rat w_standard_onepart(int d, int q, int s, const Partition& beta) {
  detail::check_onepart(d, beta);
  if (s < 0) throw std::invalid_argument("s must be nonnegative");
  if (q < 1) throw std::invalid_argument("q must be positive");
  if (q > d) return 0;
  TruncSeries v = detail::onepart_v_series(beta, s);
  v *= TruncSeries::monomial({"x", "y"}, {d, s}, "y", 1, make_rat(d, 2)).exp();
  Rat coeff = detail::y_coefficients_after_derivative(v, d - q, s)[static_cast<size_t>(s)];
  return Rat(class_size(beta)) * pow(Rat(d), s - 1) / Rat(factorial(q) * factorial(d - q)) * coeff;
}

/// H_{d,m}(K; (d), beta) by the alternating Stirling sum.
inline Rat h_onepart(int d, int m, const Partition& K, const Partition& beta, Engine engine = Engine::CharacterSum) {
  detail::check_onepart(d, beta);
  if (m < 1) throw std::invalid_argument("m must be positive");
  Rat h = 0;
  for (int i = 0; i <= d - m; ++i)
    h += Rat(sign_pow(i) * stirling1_unsigned(m + i, m)) * w_onepart(d, m + i, K, beta, engine);
  return h;
}

/// Which hook-on-hook character the hook-shape formula uses.
enum class HookSign { Signed, AsPrinted };

/// W-tilde_{d,m}([1^{d'-i}, i]; (d), [1^{d-j}, j]), i.e. i! times W-bar.
inline Rat w_hook(int d, int m, int dprime, int i, int j, HookSign sign = HookSign::Signed) {
  if (d < 1 || i < 1 || i > dprime || j < 1 || j > d || m < 1)
    throw std::invalid_argument("w_hook index out of range");
  if (m > d) return 0;
  Rat sum = 0;
  for (int k = 0; k <= d - 1; ++k) {
    BigInt bin = binomial(d - k - 1, d - m);
    if (bin == 0) continue;
    Rat pk = pow(make_rat(2 * (d - k) - 1, 2), i) - pow(make_rat(-2 * k - 1, 2), i);
    BigInt chi = sign == HookSign::Signed ? hook_on_hook_char(d, k, j) : hook_on_hook_char_unsigned(d, k, j);
    sum += Rat(sign_pow(k) * chi * bin) * pk;
  }
  Rat pre = Rat(class_size(theta(j, d))) * pow(Rat(d), dprime - i - 1) / Rat(factorial(m));
  return pre * sum;
}

/// H-tilde of the hook pair, by the Stirling sum over w_hook.
inline Rat h_hook(int d, int m, int dprime, int i, int j, HookSign sign = HookSign::Signed) {
  Rat h = 0;
  for (int k = 0; k <= d - m; ++k) h += Rat(sign_pow(k) * stirling1_unsigned(m + k, m)) * w_hook(d, m + k, dprime, i, j, sign);
  return h;
}

// ---------------------------------------------------------------------------
// One-part double numbers via the sinh expansion.

/// xi_{2j} = [x^{2j}] log(sinh x / x) for 2j <= order.
struct SinhExpansion {
  int order = 0;
  std::map<int, Rat> xi;  // keyed by 2j

  Rat operator[](int two_j) const {
    if (two_j > order) throw std::out_of_range("sinh expansion truncated below requested order");
    auto it = xi.find(two_j);
    return it == xi.end() ? Rat(0) : it->second;
  }
};

inline SinhExpansion sinh_expansion(int order) {
  if (order < 0) throw std::invalid_argument("negative order");
  TruncSeries s({"x"}, {order});
  for (int k = 0; 2 * k <= order; ++k) s.add_term({2 * k}, make_rat(1, factorial(2 * k + 1)));
  TruncSeries lg = s.log();
  SinhExpansion out;
  out.order = order;
  for (int j = 1; 2 * j <= order; ++j) out.xi[2 * j] = lg.coeff({2 * j});
  return out;
}

/// S_{2j} = -1 + sum beta_k^{2j}.
inline Rat s_power(const Partition& beta, int two_j) {
  Rat s = -1;
  for (int b : beta.parts()) s += Rat(ipow(b, two_j));
  return s;
}

/// sum_lambda xi_{2 lambda} S_{2 lambda} / Aut(lambda) (y/2)^{2|lambda|} as a
/// series in y up to ycap.
inline TruncSeries sinh_product_series(const Partition& beta, int ycap) {
  const SinhExpansion xi = sinh_expansion(ycap);
  TruncSeries out({"y"}, {ycap});
  for (int size = 0; 2 * size <= ycap; ++size) {
    for (const auto& lambda : partitions_of(size)) {
      Rat c = Rat(1) / Rat(aut(lambda));
      for (int part : lambda.parts()) c *= xi[2 * part] * s_power(beta, 2 * part);
      out.add_term({2 * size}, c / Rat(ipow(2, 2 * size)));
    }
  }
  return out;
}

/// H_{d,d}(K; (d), beta) from the sinh-expansion corollary.
inline Rat h_double_onepart(int d, const Partition& K, const Partition& beta) {
  detail::check_onepart(d, beta);
  const int T = detail::t_range(K);
  const int n = beta.length();
  auto u = detail::u_coefficients(K);
  TruncSeries y_series = TruncSeries::monomial({"y"}, {T}, "y", 1, make_rat(-d, 2)).exp() * sinh_product_series(beta, T);
  y_series = y_series.shifted("y", n - 1);
  Rat sum = 0;
  for (int t = 0; t <= T; ++t)
    sum += u[static_cast<size_t>(t)] * Rat(factorial(t)) / Rat(ipow(d, t)) * y_series.coeff({t});
  const long dprime = K.size();
  return pow(Rat(d), dprime - 1) / Rat(aut(beta)) * detail::k_multiplicity_factor(K) * sum;
}

// ---------------------------------------------------------------------------
// Generating function over K.

struct GenfuncMismatch {
  std::vector<int> b;  // exponents of t_1..t_l
  Rat left;
  Rat right;
};

struct GenfuncReport {
  int d = 0;
  int m = 0;
  Partition beta;
  std::vector<int> caps;
  size_t coefficients_checked = 0;
  std::vector<GenfuncMismatch> mismatches;
};

/// Compares both sides of the K-generating function coefficientwise for all
/// multiplicity vectors b with b_i <= caps[i-1].
inline GenfuncReport genfunc_check(int d, int m, const Partition& beta, const std::vector<int>& caps) {
  detail::check_onepart(d, beta);
  if (m < 1 || m > d) throw std::invalid_argument("m must lie in [1, d]");
  for (int c : caps)
    if (c < 0) throw std::invalid_argument("caps must be nonnegative");
  GenfuncReport report{d, m, beta, caps, 0, {}};
  const int l = static_cast<int>(caps.size());
  int T = 0;
  for (int i = 1; i <= l; ++i) T += (i - 1) * caps[static_cast<size_t>(i - 1)];

  // Right side: |C_beta| / d! sum_t [z^t] t!/d^{t+1} U [y^t] sum_i ... as a series in t's.
  std::vector<std::string> vars;
  std::vector<int> vcaps;
  for (int i = 1; i <= l; ++i) {
    vars.push_back("t" + std::to_string(i));
    vcaps.push_back(caps[static_cast<size_t>(i - 1)]);
  }
  vars.push_back("z");
  vcaps.push_back(T);
  TruncSeries expo(vars, vcaps);
  for (int i = 1; i <= l; ++i) {
    std::vector<int> e(vars.size(), 0);
    e[static_cast<size_t>(i - 1)] = 1;
    for (int j = 0; j <= i - 1; ++j) {
      e.back() = j;
      expo.add_term(e, Rat(binomial(i, j)));
    }
  }
  TruncSeries u = expo.exp();
  const TruncSeries vser = detail::onepart_v_series(beta, T);
  std::vector<Rat> ycoef(static_cast<size_t>(T) + 1, Rat(0));
  for (int i = 0; i <= d - m; ++i) {
    auto yc = detail::y_coefficients_after_derivative(vser, d - m - i, T);
    Rat w = Rat(sign_pow(i) * stirling1_unsigned(m + i, m) * binomial(d, m + i));
    for (int t = 0; t <= T; ++t) ycoef[static_cast<size_t>(t)] += w * yc[static_cast<size_t>(t)];
  }
  TruncSeries rhs(std::vector<std::string>(vars.begin(), vars.end() - 1), std::vector<int>(vcaps.begin(), vcaps.end() - 1));
  for (int t = 0; t <= T; ++t) {
    TruncSeries zt = u.coefficient_in("z", t);
    Rat factor = Rat(class_size(beta)) / Rat(factorial(d)) * Rat(factorial(t)) / Rat(ipow(d, t + 1)) * ycoef[static_cast<size_t>(t)];
    for (const auto& [e, c] : zt.terms()) rhs.add_term(std::vector<int>(e.begin(), e.end() - 1), c * factor);
  }

  // Left side, coefficient by coefficient.
  std::vector<int> b(static_cast<size_t>(l), 0);
  while (true) {
    std::vector<int> parts;
    Rat weight = 1;
    for (int i = 1; i <= l; ++i) {
      int bi = b[static_cast<size_t>(i - 1)];
      parts.insert(parts.end(), static_cast<size_t>(bi), i);
      weight *= Rat(ipow(static_cast<long>(factorial(i).get_si()), bi)) / Rat(ipow(d, static_cast<long>(i) * bi) * factorial(bi));
    }
    Rat left = h_onepart(d, m, Partition::from_multiset(parts), beta) * weight;
    Rat right = rhs.coeff(b);
    ++report.coefficients_checked;
    if (left != right) report.mismatches.push_back({b, left, right});
    int i = 0;
    while (i < l && b[static_cast<size_t>(i)] == caps[static_cast<size_t>(i)]) b[static_cast<size_t>(i++)] = 0;
    if (i == l) break;
    ++b[static_cast<size_t>(i)];
  }
  return report;
}

}  // namespace hurwitz
