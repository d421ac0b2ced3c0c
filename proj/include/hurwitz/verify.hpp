#pragma once

// Acceptance suites, shared by the `verify` verb and the acceptance binary.
// Every suite returns counts and a few sample failures; nothing is printed
// here.

#include "hurwitz/characters.hpp"
#include "hurwitz/decomposition.hpp"
#include "hurwitz/hurwitz_numbers.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/polynomiality.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/shifted.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace hurwitz::verify {

struct Options {
  int dmax = 0;  // 0 keeps each suite's own range
  int jobs = 1;
  int oracle_cap = oracle::kDefaultCap;

  int limit(int fallback) const { return dmax > 0 ? dmax : fallback; }
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = true;
  size_t checks = 0;
  size_t failures = 0;
  double seconds = 0;
  std::vector<std::string> samples;  // first failures
  std::vector<std::string> notes;    // informational findings

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (ok) return;
    ++failures;
    passed = false;
    if (samples.size() < 8) samples.push_back(describe());
  }
  void fail(const std::string& why) {
    passed = false;
    ++failures;
    if (samples.size() < 8) samples.push_back(why);
  }
};

inline std::string describe_cell(int d, int m, const Partition& K, const Partition& beta) {
  return "d=" + std::to_string(d) + " m=" + std::to_string(m) + " K=" + K.to_string() + " beta=" + beta.to_string();
}

namespace detail {

template <typename Body>
CriterionResult timed(int id, const std::string& name, Body&& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// K with |K| <= size_cap and parts <= part_cap, the empty K included.
inline std::vector<Partition> k_range(int size_cap, int part_cap) {
  std::vector<Partition> out;
  for (auto& K : partitions_up_to(size_cap))
    if (K.largest() <= part_cap) out.push_back(K);
  return out;
}

struct Cell {
  int d;
  Partition K;
  Partition beta;
};

inline std::vector<Cell> onepart_cells(int dmax, const std::vector<Partition>& ks) {
  std::vector<Cell> cells;
  for (int d = 1; d <= dmax; ++d)
    for (const auto& K : ks)
      for (const auto& beta : partitions_of(d)) cells.push_back({d, K, beta});
  return cells;
}

}  // namespace detail

/// 1. Completed cycles k = 1..4 against the printed table, with the (k-1)! scaling.
inline CriterionResult completed_cycle_table(const Options&) {
  return detail::timed(1, "completed-cycle golden table", [](CriterionResult& r) {
    const std::vector<std::map<Partition, Rat>> table{
        {{Partition{1}, Rat(1)}},
        {{Partition{2}, Rat(1)}},
        {{Partition{3}, Rat(1)}, {Partition{1, 1}, Rat(1)}, {Partition{1}, make_rat(1, 12)}},
        {{Partition{4}, Rat(1)}, {Partition{2, 1}, Rat(2)}, {Partition{2}, make_rat(5, 4)}},
    };
    auto t0 = std::chrono::steady_clock::now();
    for (int k = 1; k <= 4; ++k) {
      ClassVector scaled = completed_cycle(k) * Rat(factorial(k - 1));
      const auto& want = table[static_cast<size_t>(k - 1)];
      r.check(scaled.size() == want.size(), [&] { return "k=" + std::to_string(k) + " has " + std::to_string(scaled.size()) + " terms"; });
      for (const auto& [p, c] : want)
        r.check(scaled[p] == c, [&] { return "k=" + std::to_string(k) + " " + p.to_string() + " = " + to_string(scaled[p]); });
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.check(secs < 1.0, [&] { return "runtime " + std::to_string(secs) + " s"; });
  });
}

/// 2. h_onepart = h_quasi = h_via_hooks = oracle on d <= 5, |K| <= 5.
inline CriterionResult master_oracle(const Options& opt) {
  return detail::timed(2, "master oracle equivalence", [&](CriterionResult& r) {
    const int dmax = opt.limit(5);
    auto cells = detail::onepart_cells(dmax, detail::k_range(5, 5));
    std::vector<std::vector<std::string>> bad(cells.size());
    std::vector<size_t> counts(cells.size(), 0);
    hurwitz::detail::parallel_for(cells.size(), opt.jobs, [&](size_t c) {
      const auto& [d, K, beta] = cells[c];
      for (int m = 1; m <= d; ++m) {
        ++counts[c];
        Rat one = h_onepart(d, m, K, beta);
        Rat quasi = h_quasi(HurwitzQuery{d, m, K, {Partition{d}, beta}, false});
        Rat orc = oracle::h_by_definition(oracle::Query{d, m, K, {Partition{d}, beta}, false}, oracle::Lift::PartialPermutation,
                                          opt.oracle_cap);
        bool ok = one == quasi && one == orc;
        if (!K.empty()) ok = ok && h_via_hooks(d, m, K, beta) == one;
        if (!ok) bad[c].push_back(describe_cell(d, m, K, beta) + " onepart=" + to_string(one) + " quasi=" + to_string(quasi) + " oracle=" + to_string(orc));
      }
    });
    for (size_t c = 0; c < cells.size(); ++c) {
      r.checks += counts[c];
      for (auto& s : bad[c]) r.fail(s);
    }
  });
}

/// 3. Engines (a) = (b) on d <= 7, |K| <= 5; engine (c) up to one global constant.
inline CriterionResult engine_triangulation(const Options& opt) {
  return detail::timed(3, "engine triangulation", [&](CriterionResult& r) {
    const int dmax = opt.limit(7);
    auto cells = detail::onepart_cells(dmax, detail::k_range(5, 5));
    struct Out {
      std::vector<std::string> bad;
      std::vector<std::pair<Rat, Rat>> ratios;  // (c / a, (d - q)!)
      size_t checks = 0;
    };
    std::vector<Out> outs(cells.size());
    hurwitz::detail::parallel_for(cells.size(), opt.jobs, [&](size_t c) {
      const auto& [d, K, beta] = cells[c];
      for (int q = 1; q <= d; ++q) {
        ++outs[c].checks;
        Rat a = w_onepart(d, q, K, beta, Engine::CharacterSum);
        Rat b = w_onepart(d, q, K, beta, Engine::GeneratingFunction);
        Rat cc = w_onepart(d, q, K, beta, Engine::Bernoulli);
        if (a != b) outs[c].bad.push_back(describe_cell(d, q, K, beta) + " (a)=" + to_string(a) + " (b)=" + to_string(b));
        if (a != 0) outs[c].ratios.emplace_back(cc / a, Rat(factorial(d - q)));
        else if (cc != 0) outs[c].bad.push_back(describe_cell(d, q, K, beta) + " (a)=0 but (c)=" + to_string(cc));
      }
    });
    std::set<Rat> ratios;
    std::set<Rat> ratio_over_factorial;
    size_t instances = 0;
    for (auto& o : outs) {
      r.checks += o.checks;
      for (auto& s : o.bad) r.fail(s);
      for (auto& [ratio, f] : o.ratios) {
        ++instances;
        ratios.insert(ratio);
        ratio_over_factorial.insert(ratio / f);
      }
    }
    std::string list;
    for (const auto& v : ratios) list += (list.empty() ? "" : ", ") + to_string(v);
    r.notes.push_back("engine (c)/(a) over " + std::to_string(instances) + " nonzero instances takes values {" + list + "}");
    std::string over;
    for (const auto& v : ratio_over_factorial) over += (over.empty() ? "" : ", ") + to_string(v);
    r.notes.push_back("engine (c)/(a) divided by (d-q)! takes values {" + over + "}");
    r.check(instances >= 50, [&] { return "only " + std::to_string(instances) + " nonzero instances for engine (c)"; });
    r.check(ratios.size() == 1, [&] { return "engine (c)/(a) is not one global constant: {" + list + "}"; });
  });
}

/// 4. Frobenius identity and both W routes to xi against explicit counts.
inline CriterionResult frobenius(const Options& opt) {
  return detail::timed(4, "Frobenius identity and xi routes", [&](CriterionResult& r) {
    const int dmax = opt.limit(5);
    for (int d = 1; d <= dmax; ++d) {
      auto ps = partitions_of(d);
      for (const auto& a : ps)
        for (const auto& b : ps)
          for (const auto& c : ps) {
            std::vector<Partition> cls{a, b, c};
            const std::string tag = "d=" + std::to_string(d) + " " + a.to_string() + b.to_string() + c.to_string();
            Rat count = Rat(oracle::frobenius_count(cls, opt.oracle_cap));
            Rat chars = frobenius_character_sum(cls);
            r.check(count == chars, [&] { return tag + " count=" + to_string(count) + " characters=" + to_string(chars); });
            for (int m = 1; m <= d; ++m) {
              Rat xi = Rat(oracle::xi_count(d, m, cls, opt.oracle_cap));
              Rat s = xi_from_w_sum(d, m, cls);
              Rat rec = xi_from_w_recursion(d, m, cls);
              r.check(xi == s && xi == rec, [&] { return tag + " m=" + std::to_string(m) + " xi=" + to_string(xi) + " sum=" + to_string(s) + " rec=" + to_string(rec); });
              if (a == Partition{d}) {
                Rat full = w_classes_full_cycle(d, m, {b, c});
                Rat gen = w_classes(d, m, cls);
                r.check(full == gen, [&] { return tag + " m=" + std::to_string(m) + " full-cycle W differs"; });
              }
            }
          }
    }
  });
}

/// 5. Hook rows against Murnaghan-Nakayama; both orthogonality relations.
inline CriterionResult character_cross_validation(const Options& opt) {
  return detail::timed(5, "character cross-validation", [&](CriterionResult& r) {
    const int dmax = opt.limit(9);
    for (int d = 1; d <= dmax; ++d)
      for (const auto& beta : partitions_of(d)) {
        auto row = hook_char_row(beta);
        for (int j = 0; j < d; ++j) {
          long mn = mn_char(hook(d, j), beta);
          r.check(row[static_cast<size_t>(j)] == mn, [&] { return "beta=" + beta.to_string() + " j=" + std::to_string(j); });
        }
      }
    const int omax = std::min(dmax, 7);
    for (int d = 1; d <= omax; ++d) {
      auto ps = partitions_of(d);
      for (const auto& l1 : ps)
        for (const auto& l2 : ps) {
          BigInt row = 0;
          for (const auto& mu : ps) row += class_size(mu) * mn_char(l1, mu) * mn_char(l2, mu);
          BigInt want = l1 == l2 ? factorial(d) : BigInt(0);
          r.check(row == want, [&] { return "row orthogonality " + l1.to_string() + " " + l2.to_string(); });
          BigInt col = 0;
          for (const auto& lam : ps) col += BigInt(mn_char(lam, l1) * mn_char(lam, l2));
          BigInt zwant = l1 == l2 ? z_aut_classsize(l1).z : BigInt(0);
          r.check(col == zwant, [&] { return "column orthogonality " + l1.to_string() + " " + l2.to_string(); });
        }
    }
  });
}

/// 6. Reconstruction and vanishing for all beta with |beta| <= 12, under 10 s.
inline CriterionResult decomposition_exactness(const Options& opt) {
  return detail::timed(6, "decomposition exactness", [&](CriterionResult& r) {
    const int dmax = opt.limit(12);
    auto t0 = std::chrono::steady_clock::now();
    for (int d = 1; d <= dmax; ++d)
      for (const auto& beta : partitions_of(d)) {
        DecompCoeffs a = decompose(beta);
        r.check(a.reconstruct() == rho_poly(beta), [&] { return "reconstruction " + beta.to_string(); });
        r.check(a.vanishing_holds(beta.length()), [&] { return "vanishing " + beta.to_string(); });
      }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.check(secs < 10.0, [&] { return "runtime " + std::to_string(secs) + " s"; });
  });
}

/// 7. Factorizations of a d-cycle into d - 1 transpositions number d^{d-2}.
inline CriterionResult classical_anchor(const Options& opt) {
  return detail::timed(7, "classical anchor", [&](CriterionResult& r) {
    const int dmax = std::min(opt.limit(6), opt.oracle_cap);
    for (int d = 2; d <= dmax; ++d) {
      BigInt got = oracle::single_hurwitz_check(d, opt.oracle_cap);
      r.check(got == ipow(d, d - 2), [&] { return "d=" + std::to_string(d) + " got " + got.get_str(); });
    }
  });
}

/// 8. Double polynomiality, the lambda_g analogue, string and dilaton.
inline CriterionResult polynomiality_suite(const Options& opt) {
  return detail::timed(8, "polynomiality", [&](CriterionResult& r) {
    for (const auto& K : std::vector<Partition>{{2}, {2, 2}, {3}, {3, 3}, {3, 2}})
      for (int n = 1; n <= 2; ++n) {
        DoubleFit f = fit_double_poly(K, n, 0, opt.jobs);
        const std::string tag = "K=" + K.to_string() + " n=" + std::to_string(n);
        r.check(f.counterexamples.empty(), [&] { return tag + " has " + std::to_string(f.counterexamples.size()) + " off-grid mismatches"; });
        r.check(f.out_of_sample_points > 0, [&] { return tag + " has no off-grid points"; });
        r.check(f.within_window, [&] { return tag + " support outside [s, sum k - n + 1]"; });
        r.check(f.symmetric, [&] { return tag + " fit is not symmetric"; });
      }

    // Strata whose K has a single part size, so the printed constant applies.
    const std::vector<std::pair<Partition, int>> strata{
        {{2, 2}, 1}, {{3}, 1}, {{2, 2, 2}, 2}, {{3, 3}, 3}, {{4}, 2}, {{2, 2, 2, 2}, 3}, {{5}, 3},
        {{3, 3}, 1}, {{5}, 1}, {{2, 2, 2, 2}, 1}, {{3, 3, 3}, 3}, {{4, 4}, 3}, {{6}, 2}, {{2, 2, 2, 2, 2}, 2},
    };
    std::map<int, int> per_genus;
    for (const auto& [K, n] : strata) {
      std::vector<std::vector<int>> zs;
      std::vector<int> cur;
      hurwitz::detail::weak_compositions(K.length(), n, cur, zs);
      int g = -1;
      for (const auto& z : zs) {
        WittenSymbol w = make_witten(K, z);
        g = w.g;
        Rat got = witten_lowest_coeff(w, opt.jobs);
        Rat want = Rat(multinomial(z)) * lambda_g_constant(K, w.g);
        r.check(got == want, [&] { return "lambda_g K=" + K.to_string() + " g=" + std::to_string(w.g) + " extracted " + to_string(got) + " closed " + to_string(want); });
      }
      ++per_genus[g];
    }
    for (int g : {1, 2}) r.check(per_genus[g] >= 5, [&] { return "fewer than 5 strata at g=" + std::to_string(g); });

    // Mixed-part and genus-0 strata: report how the printed constant fares.
    size_t mixed = 0, mixed_printed = 0, mixed_general = 0;
    for (const auto& [K, n] : std::vector<std::pair<Partition, int>>{{{3, 2}, 2}, {{4, 2}, 1}, {{4, 2}, 3}, {{3, 2, 2}, 1}, {{4, 3}, 2}, {{2}, 2}, {{2, 2}, 3}}) {
      std::vector<std::vector<int>> zs;
      std::vector<int> cur;
      hurwitz::detail::weak_compositions(K.length(), n, cur, zs);
      for (const auto& z : zs) {
        WittenSymbol w = make_witten(K, z);
        Rat got = witten_lowest_coeff(w, opt.jobs);
        ++mixed;
        mixed_printed += got == Rat(multinomial(z)) * lambda_g_constant(K, w.g) ? 1 : 0;
        mixed_general += got == Rat(multinomial(z)) * lambda_g_constant(K, w.g, ConstantForm::General) ? 1 : 0;
      }
    }
    r.notes.push_back("lambda_g on mixed-part or genus-0 strata: printed constant matches " + std::to_string(mixed_printed) + "/" +
                      std::to_string(mixed) + ", general constant matches " + std::to_string(mixed_general) + "/" + std::to_string(mixed));

    auto single_size = [](const Partition& K) { return K.parts().front() == K.parts().back(); };
    for (bool dilaton : {false, true}) {
      auto instances = dilaton ? dilaton_instances(6, 3) : string_instances(6, 3);
      size_t uniform = 0, printed_all = 0, general_all = 0;
      for (const auto& in : instances) {
        SymbolCheck c = dilaton ? check_dilaton(in.K_aug, in.z, in.x, opt.jobs) : check_string(in.K_aug, in.z, in.x, opt.jobs);
        printed_all += c.holds ? 1 : 0;
        general_all += c.holds_general ? 1 : 0;
        if (!single_size(in.K_aug)) continue;
        ++uniform;
        r.check(c.holds, [&] { return std::string(dilaton ? "dilaton" : "string") + " K_aug=" + in.K_aug.to_string() + " x=" + std::to_string(in.x); });
      }
      const std::string what = dilaton ? "dilaton" : "string";
      r.check(uniform >= 3, [&] { return "fewer than 3 " + what + " instances"; });
      r.notes.push_back(what + ": " + std::to_string(uniform) + " single-part-size instances checked; over all " + std::to_string(instances.size()) +
                        " admissible instances the printed prefactor holds on " + std::to_string(printed_all) + " and the general one on " +
                        std::to_string(general_all));
    }
  });
}

/// 9. Parity failure of the dimension constraint forces exact vanishing.
inline CriterionResult parity_vanishing(const Options& opt) {
  return detail::timed(9, "parity vanishing", [&](CriterionResult& r) {
    const int dmax = opt.limit(5);
    size_t zero_admissible = 0, negative_genus = 0;
    for (const auto& [d, K, beta] : detail::onepart_cells(dmax, detail::k_range(5, 5)))
      for (int m = 1; m <= d; ++m) {
        HurwitzQuery q{d, m, K, {Partition{d}, beta}, false};
        Rat h = h_onepart(d, m, K, beta);
        if (!parity_admissible(q)) {
          r.check(h == 0, [&] { return describe_cell(d, m, K, beta) + " = " + to_string(h) + " with half-integral genus"; });
        } else if (h == 0) {
          ++zero_admissible;
          if (quasi_genus(q) < 0) ++negative_genus;
        }
      }
    r.notes.push_back(std::to_string(zero_admissible) + " zeros with integral genus (" + std::to_string(negative_genus) +
                      " of them with negative genus)");
  });
}

inline std::vector<int> all_ids() { return {1, 2, 3, 4, 5, 6, 7, 8, 9}; }

inline CriterionResult run_criterion(int id, const Options& opt) {
  switch (id) {
    case 1: return completed_cycle_table(opt);
    case 2: return master_oracle(opt);
    case 3: return engine_triangulation(opt);
    case 4: return frobenius(opt);
    case 5: return character_cross_validation(opt);
    case 6: return decomposition_exactness(opt);
    case 7: return classical_anchor(opt);
    case 8: return polynomiality_suite(opt);
    case 9: return parity_vanishing(opt);
  }
  throw std::invalid_argument("unknown criterion " + std::to_string(id));
}

}  // namespace hurwitz::verify
