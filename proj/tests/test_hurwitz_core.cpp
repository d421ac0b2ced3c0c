#include "hurwitz/hurwitz_numbers.hpp"
#include "hurwitz/oracle.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace hurwitz;

namespace {

std::vector<Partition> small_k(int max_size) {
  std::vector<Partition> out;
  for (auto& p : partitions_up_to(max_size)) {
    bool ok = true;
    for (int k : p.parts()) ok = ok && k >= 2;
    if (ok) out.push_back(p);
  }
  return out;
}

Rat oracle_value(const HurwitzQuery& q) {
  return oracle::h_by_definition(oracle::Query{q.d, q.m, q.K, q.profiles, q.starred});
}

}  // namespace

TEST(Genus, DimensionConstraint) {
  HurwitzQuery q{2, 2, Partition{2}, {Partition{2}, Partition{1, 1}}, false};
  EXPECT_EQ(quasi_genus(q), 0);
  EXPECT_TRUE(parity_admissible(q));
  q.K = Partition{3};
  EXPECT_EQ(quasi_genus(q), make_rat(1, 2));
  EXPECT_FALSE(parity_admissible(q));
}

TEST(QuasiNumbers, Examples) {
  EXPECT_EQ(h_quasi({2, 2, Partition{2}, {Partition{2}, Partition{1, 1}}, false}), make_rat(1, 2));
  EXPECT_EQ(h_quasi({3, 1, Partition{}, {Partition{2, 1}, Partition{2, 1}}, false}), 1);
  EXPECT_EQ(h_quasi({3, 3, Partition{}, {Partition{2, 1}, Partition{2, 1}}, false}), make_rat(1, 2));
  // a lone d-cycle profile has one cycle, so only m = 1 survives
  for (int d = 1; d <= 6; ++d) {
    EXPECT_EQ(h_quasi({d, 1, Partition{}, {Partition{d}}, false}), make_rat(1, d));
    if (d > 1) {
      EXPECT_EQ(h_quasi({d, d, Partition{}, {Partition{d}}, false}), 0);
    }
  }
  EXPECT_EQ(h_quasi({3, 4, Partition{2}, {Partition{3}}, false}), 0);
}

TEST(QuasiNumbers, MatchOracle) {
  for (int d = 1; d <= 4; ++d)
    for (auto& K : small_k(4))
      for (auto& beta : partitions_of(d))
        for (int m = 1; m <= d; ++m) {
          HurwitzQuery q{d, m, K, {Partition{d}, beta}, false};
          EXPECT_EQ(h_quasi(q), oracle_value(q)) << d << " " << m << " " << K.to_string() << " " << beta.to_string();
        }
  // two arbitrary profiles
  for (auto& a : partitions_of(4))
    for (auto& b : partitions_of(4))
      for (int m = 1; m <= 4; ++m) {
        HurwitzQuery q{4, m, Partition{3}, {a, b}, false};
        EXPECT_EQ(h_quasi(q), oracle_value(q));
      }
}

TEST(QuasiNumbers, RoutesAgree) {
  for (auto& K : small_k(4))
    for (auto& beta : partitions_of(5))
      for (int m = 1; m <= 5; ++m) {
        HurwitzQuery q{5, m, K, {Partition{5}, beta}, false};
        EXPECT_EQ(h_quasi_sum(q), h_quasi_recursive(q));
        EXPECT_EQ(w_general(q), w_onepart(5, m, K, beta));
      }
}

TEST(QuasiNumbers, Validation) {
  EXPECT_THROW(h_quasi({0, 1, Partition{}, {}, false}), std::invalid_argument);
  EXPECT_THROW(h_quasi({3, 0, Partition{}, {}, false}), std::invalid_argument);
  EXPECT_THROW(h_quasi({3, 1, Partition{}, {Partition{2}}, false}), std::invalid_argument);
}

TEST(FullNumbers, MatchOracle) {
  EXPECT_EQ(h_full(2, Partition{2}, {Partition{2}}), make_rat(1, 2));
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(h_full(d, Partition{}, {Partition{d}, Partition{d}}), make_rat(1, d));
  for (int d = 1; d <= 4; ++d)
    for (auto& K : small_k(5))
      for (auto& beta : partitions_of(d)) {
        oracle::Query oq{d, 1, K, {Partition{d}, beta}, false};
        EXPECT_EQ(h_full(d, K, {Partition{d}, beta}), oracle::h_full_by_definition(oq));
        oq.starred = true;
        EXPECT_EQ(h_full(d, K, {Partition{d}, beta}, true), oracle::h_full_by_definition(oq));
        EXPECT_EQ(h_full(d, K, {Partition{d}, beta}, true), h_full_star_expansion(d, K, {Partition{d}, beta}));
      }
}

TEST(StarredNumbers, SubsetExpansion) {
  for (int d = 1; d <= 4; ++d)
    for (auto& beta : partitions_of(d))
      for (int m = 1; m <= d; ++m) {
        HurwitzQuery q{d, m, Partition{3}, {Partition{d}, beta}, true};
        HurwitzQuery base{d, m, Partition{3}, {Partition{d}, beta}, false};
        HurwitzQuery none{d, m, Partition{}, {Partition{d}, beta}, false};
        EXPECT_EQ(h_star(q), h_quasi(base) + make_rat(7, 5760) * h_quasi(none));
        EXPECT_EQ(h_star(q), oracle_value(q));
        HurwitzQuery twos{d, m, Partition{2, 2}, {Partition{d}, beta}, true};
        EXPECT_EQ(h_star(twos), h_quasi({d, m, Partition{2, 2}, {Partition{d}, beta}, false}));
      }
}

TEST(StationarySector, Genus) {
  for (int d = 1; d <= 5; ++d) {
    GwSector s = gw_sector(d, {}, {Partition{d}, Partition{d}});
    EXPECT_EQ(s.genus, 0);
    EXPECT_EQ(s.value, make_rat(1, d));
  }
  GwSector t = gw_sector(2, {1}, {Partition{2}});
  EXPECT_EQ(t.value, h_full(2, Partition{2}, {Partition{2}}, true));
  EXPECT_EQ(t.genus, 0);
  EXPECT_THROW(gw_sector(2, {-1}, {}), std::invalid_argument);
}

TEST(ParityVanishing, OddConstraintGivesZero) {
  for (int d = 1; d <= 5; ++d)
    for (auto& K : small_k(5))
      for (auto& beta : partitions_of(d))
        for (int m = 1; m <= d; ++m) {
          HurwitzQuery q{d, m, K, {Partition{d}, beta}, false};
          if (!parity_admissible(q)) {
            EXPECT_EQ(h_onepart(d, m, K, beta), 0);
          }
        }
}

TEST(OnePartEngines, CharacterSumAndGeneratingFunctionAgree) {
  for (int d = 1; d <= 6; ++d)
    for (auto& K : small_k(5))
      for (auto& beta : partitions_of(d))
        for (int q = 1; q <= d; ++q)
          EXPECT_EQ(w_onepart(d, q, K, beta, Engine::CharacterSum), w_onepart(d, q, K, beta, Engine::GeneratingFunction))
              << d << " " << q << " " << K.to_string() << " " << beta.to_string();
}

TEST(OnePartEngines, BernoulliCarriesFactorialOfCodimension) {
  // The Bernoulli expression as written exceeds the character sum by (d-q)!.
  size_t nonzero = 0;
  for (int d = 1; d <= 6; ++d)
    for (auto& K : small_k(4))
      for (auto& beta : partitions_of(d))
        for (int q = 1; q <= d; ++q) {
          Rat a = w_onepart(d, q, K, beta, Engine::CharacterSum);
          Rat c = w_onepart(d, q, K, beta, Engine::Bernoulli);
          EXPECT_EQ(c, a * Rat(factorial(d - q)));
          if (a != 0) ++nonzero;
        }
  EXPECT_GE(nonzero, 50u);
}

TEST(OnePartEngines, Examples) {
  EXPECT_EQ(h_onepart(2, 2, Partition{2}, Partition{1, 1}), make_rat(1, 2));
  EXPECT_EQ(w_onepart(2, 2, Partition{2}, Partition{1, 1}), make_rat(1, 2));
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(h_onepart(d, d, Partition{}, Partition{d}), make_rat(1, d));
  HurwitzQuery q{3, 3, Partition{3}, {Partition{3}, Partition{1, 1, 1}}, false};
  EXPECT_EQ(w_onepart(3, 3, Partition{3}, Partition{1, 1, 1}), oracle_value(q));
  EXPECT_EQ(h_onepart(3, 4, Partition{2}, Partition{3}), 0);
  EXPECT_THROW(h_onepart(3, 1, Partition{2}, Partition{2, 2}), std::invalid_argument);
  EXPECT_STREQ(engine_name(Engine::Bernoulli), "bernoulli");
}

TEST(OnePartEngines, StandardCycleClosedFormOffBySFactorial) {
  for (int s = 0; s <= 4; ++s) {
    std::vector<int> twos(static_cast<size_t>(s), 2);
    const Partition K(twos);
    for (int d = 1; d <= 6; ++d)
      for (auto& beta : partitions_of(d))
        for (int q = 1; q <= d; ++q) EXPECT_EQ(w_standard_onepart(d, q, s, beta) * Rat(factorial(s)), w_onepart(d, q, K, beta));
  }
}

TEST(GeneratingFunction, NoMismatches) {
  auto r1 = genfunc_check(2, 1, Partition{1, 1}, {2, 2});
  EXPECT_GT(r1.coefficients_checked, 0u);
  EXPECT_TRUE(r1.mismatches.empty());
  for (int m = 1; m <= 3; ++m) EXPECT_TRUE(genfunc_check(3, m, Partition{3}, {2, 1, 1}).mismatches.empty());
  for (auto& beta : partitions_of(4)) EXPECT_TRUE(genfunc_check(4, 2, beta, {1, 2, 1}).mismatches.empty());
  EXPECT_TRUE(genfunc_check(3, 1, Partition{2, 1}, {0, 0}).mismatches.empty());
}

TEST(TupleCounts, XiRoutesMatchOracle) {
  for (int d = 1; d <= 4; ++d)
    for (auto& a : partitions_of(d))
      for (auto& b : partitions_of(d))
        for (int m = 1; m <= d; ++m) {
          Rat expect = Rat(oracle::xi_count(d, m, {a, b}));
          EXPECT_EQ(xi_from_w_sum(d, m, {a, b}), expect);
          EXPECT_EQ(xi_from_w_recursion(d, m, {a, b}), expect);
        }
}

TEST(TupleCounts, FullCycleShortcut) {
  for (int d = 1; d <= 6; ++d)
    for (auto& a : partitions_of(d))
      for (auto& b : partitions_of(d))
        for (int m = 1; m <= d; ++m) EXPECT_EQ(w_classes_full_cycle(d, m, {a, b}), w_classes(d, m, {Partition{d}, a, b}));
}

TEST(TupleCounts, Frobenius) {
  EXPECT_EQ(frobenius_character_sum({Partition{3}, Partition{2, 1}, Partition{2, 1}}), 6);
  for (auto& a : partitions_of(4))
    for (auto& b : partitions_of(4))
      for (auto& c : partitions_of(4)) EXPECT_EQ(frobenius_character_sum({a, b, c}), Rat(oracle::frobenius_count({a, b, c})));
}

TEST(HookNumbers, SignedMatchesOnePart) {
  for (int d = 1; d <= 6; ++d)
    for (int dprime = 1; dprime <= 5; ++dprime)
      for (int i = 1; i <= dprime; ++i)
        for (int j = 1; j <= d; ++j)
          for (int m = 1; m <= d; ++m)
            EXPECT_EQ(w_hook(d, m, dprime, i, j), Rat(factorial(i)) * w_onepart(d, m, theta(i, dprime), theta(j, d)));
}

TEST(HookNumbers, PrintedPatternDisagrees) {
  size_t bad = 0;
  for (int d = 1; d <= 6; ++d)
    for (int j = 1; j <= d; ++j)
      for (int m = 1; m <= d; ++m)
        if (w_hook(d, m, 3, 2, j, HookSign::AsPrinted) != w_hook(d, m, 3, 2, j)) ++bad;
  EXPECT_GT(bad, 0u);
  EXPECT_THROW(w_hook(3, 1, 2, 3, 1), std::invalid_argument);
}

TEST(DoubleNumbers, SinhSeries) {
  SinhExpansion xi = sinh_expansion(8);
  EXPECT_EQ(xi[2], make_rat(1, 6));
  EXPECT_EQ(xi[4], make_rat(-1, 180));
  EXPECT_EQ(xi[6], make_rat(1, 2835));
  EXPECT_EQ(xi[8], make_rat(-1, 37800));
  EXPECT_THROW(xi[10], std::out_of_range);
  EXPECT_EQ(s_power(Partition{2, 1}, 2), 4);
}

TEST(DoubleNumbers, MatchFullDegreeQuasi) {
  EXPECT_EQ(h_double_onepart(2, Partition{2}, Partition{1, 1}), make_rat(1, 2));
  for (int d = 1; d <= 6; ++d)
    for (auto& K : small_k(5))
      for (auto& beta : partitions_of(d)) EXPECT_EQ(h_double_onepart(d, K, beta), h_onepart(d, d, K, beta));
}
