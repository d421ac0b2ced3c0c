#include "hurwitz/oracle.hpp"
#include "hurwitz/polynomiality.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hurwitz;

TEST(MultiPoly, Basics) {
  MultiPoly p({"a", "b"});
  p.add_term({2, 0}, 1);
  p.add_term({0, 2}, 1);
  p.add_term({1, 1}, make_rat(-1, 2));
  EXPECT_TRUE(p.is_symmetric());
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.min_degree(), 2);
  EXPECT_EQ(p.evaluate({2, 3}), Rat(4 + 9 - 3));
  p.add_term({1, 0}, 1);
  EXPECT_FALSE(p.is_symmetric());
  EXPECT_EQ(p.support_degrees(), (std::vector<int>{1, 2}));
  p.add_term({1, 0}, -1);
  EXPECT_TRUE(p.is_symmetric());
  EXPECT_THROW(p.add_term({1}, 1), std::invalid_argument);
  EXPECT_EQ(MultiPoly({"x"}).to_string(), "0");
}

TEST(NewtonFit, RecoversPolynomial) {
  auto f = [](const std::vector<int>& v) { return Rat(v[0] * v[0] * v[1] - 3 * v[1] + 7); };
  MultiPoly p = newton_fit(f, 2, 4, {"x", "y"});
  EXPECT_EQ(p.coeff({2, 1}), 1);
  EXPECT_EQ(p.coeff({0, 1}), -3);
  EXPECT_EQ(p.coeff({0, 0}), 7);
  EXPECT_EQ(p.terms().size(), 3u);
}

TEST(DoubleValues, MatchOracle) {
  // H_{d,d}(K; (d), beta) * Aut(beta) * d from permutations directly.
  for (const Partition& K : {Partition{2}, Partition{3}, Partition{2, 2}})
    for (int d = 1; d <= 5; ++d)
      for (auto& beta : partitions_of(d)) {
        Rat brute = oracle::h_by_definition({d, d, K, {Partition{d}, beta}, false}) * Rat(aut(beta)) * Rat(d);
        EXPECT_EQ(double_value(K, beta.parts()), brute) << K.to_string() << " " << beta.to_string();
      }
}

TEST(DoubleFit, WindowsAndOutOfSample) {
  for (const Partition& K : {Partition{2}, Partition{2, 2}, Partition{3}, Partition{3, 3}, Partition{3, 2}})
    for (int n = 1; n <= 2; ++n) {
      DoubleFit f = fit_double_poly(K, n);
      EXPECT_TRUE(f.counterexamples.empty()) << K.to_string() << " n=" << n;
      EXPECT_GT(f.out_of_sample_points, 0u);
      EXPECT_TRUE(f.within_window) << K.to_string() << " n=" << n;
      EXPECT_TRUE(f.symmetric);
      EXPECT_TRUE(f.parity_steps);
      EXPECT_EQ(f.lowest_claimed, K.length());
      EXPECT_EQ(f.highest_claimed, K.size() - n + 1);
    }
}

TEST(DoubleFit, OnePartThreeCycle) {
  DoubleFit f = fit_double_poly(Partition{3}, 1);
  EXPECT_EQ(f.poly.coeff({3}), make_rat(1, 12));
  EXPECT_EQ(f.poly.coeff({1}), make_rat(-1, 24));
  EXPECT_EQ(f.poly.support_degrees(), (std::vector<int>{1, 3}));
  for (int b = 1; b <= 9; ++b) EXPECT_EQ(f.poly.evaluate({Rat(b)}), double_value(Partition{3}, {b}));
}

TEST(DoubleFit, ParallelMatchesSerial) {
  DoubleFit a = fit_double_poly(Partition{2, 2, 2}, 2, 0, 1);
  DoubleFit b = fit_double_poly(Partition{2, 2, 2}, 2, 0, 4);
  EXPECT_EQ(a.poly, b.poly);
  EXPECT_EQ(a.out_of_sample_points, b.out_of_sample_points);
}

TEST(DoubleFit, Validation) {
  EXPECT_THROW(fit_double_poly(Partition{}, 1), std::invalid_argument);
  EXPECT_THROW(fit_double_poly(Partition{2}, 0), std::invalid_argument);
  EXPECT_THROW(fit_double_poly(Partition{3, 3}, 1, 2), std::invalid_argument);
}

TEST(WittenSymbols, Construction) {
  WittenSymbol w = make_witten(Partition{3, 2}, {1, 1});
  EXPECT_EQ(w.g, 1);
  EXPECT_THROW(make_witten(Partition{3}, {2}), std::invalid_argument);     // stratum mismatch
  EXPECT_THROW(make_witten(Partition{2, 2}, {0, 2}), std::invalid_argument);  // half-integral genus
  EXPECT_EQ(multinomial({2, 1, 0}), 3);
}

TEST(LambdaG, SingleSizeStrata) {
  struct Stratum {
    Partition K;
    int n;
  };
  std::set<int> genera;
  for (const auto& st : {Stratum{{2, 2}, 1}, Stratum{{3}, 1}, Stratum{{2, 2, 2}, 2}, Stratum{{3, 3}, 3}, Stratum{{4}, 2},
                         Stratum{{3, 3}, 1}, Stratum{{5}, 1}, Stratum{{2, 2, 2, 2}, 1}, Stratum{{4, 4}, 3}, Stratum{{6}, 2}}) {
    std::vector<std::vector<int>> zs;
    std::vector<int> cur;
    detail::weak_compositions(st.K.length(), st.n, cur, zs);
    for (const auto& z : zs) {
      WittenSymbol w = make_witten(st.K, z);
      genera.insert(w.g);
      Rat expected = Rat(multinomial(z)) * lambda_g_constant(st.K, w.g);
      EXPECT_EQ(witten_lowest_coeff(w), expected) << st.K.to_string();
      EXPECT_EQ(lambda_g_constant(st.K, w.g), lambda_g_constant(st.K, w.g, ConstantForm::General));
    }
  }
  EXPECT_TRUE(genera.count(1) && genera.count(2));
}

TEST(LambdaG, MixedPartSizesNeedGeneralConstant) {
  WittenSymbol a = make_witten(Partition{3, 2}, {1, 1});
  EXPECT_EQ(witten_lowest_coeff(a), make_rat(1, 4));  // multinomial 2 times 1/8
  EXPECT_EQ(lambda_g_constant(Partition{3, 2}, 1), make_rat(1, 24));
  EXPECT_EQ(lambda_g_constant(Partition{3, 2}, 1, ConstantForm::General), make_rat(1, 8));
  WittenSymbol b = make_witten(Partition{4, 2}, {2});
  EXPECT_EQ(witten_lowest_coeff(b), make_rat(7, 1440));
  EXPECT_EQ(lambda_g_constant(Partition{4, 2}, 2), make_rat(7, 5760));
  EXPECT_EQ(lambda_g_constant(Partition{4, 2}, 2, ConstantForm::General), make_rat(7, 1440));
}

TEST(LambdaG, GenusZeroSign) {
  WittenSymbol w = make_witten(Partition{2}, {1, 0});
  EXPECT_EQ(w.g, 0);
  EXPECT_EQ(witten_lowest_coeff(w), 1);
  EXPECT_EQ(lambda_g_constant(Partition{2}, 0), -1);
  EXPECT_EQ(lambda_g_constant(Partition{2}, 0, ConstantForm::General), 1);
}

TEST(StringDilaton, SweepWithGeneralPrefactor) {
  auto strings = string_instances(6, 3);
  auto dilatons = dilaton_instances(6, 3);
  ASSERT_GE(strings.size(), 3u);
  ASSERT_GE(dilatons.size(), 3u);
  for (const auto& in : strings) {
    SymbolCheck c = check_string(in.K_aug, in.z, in.x);
    EXPECT_TRUE(c.holds_general) << in.K_aug.to_string();
    if (in.K_aug.multiplicity(in.K_aug.largest()) == in.K_aug.length()) {
      EXPECT_TRUE(c.holds) << in.K_aug.to_string();
    }
  }
  for (const auto& in : dilatons) {
    SymbolCheck c = check_dilaton(in.K_aug, in.z, in.x);
    EXPECT_TRUE(c.holds_general) << in.K_aug.to_string();
    if (in.K_aug.multiplicity(in.K_aug.largest()) == in.K_aug.length()) {
      EXPECT_TRUE(c.holds) << in.K_aug.to_string();
    }
  }
}

TEST(StringDilaton, Validation) {
  EXPECT_THROW(check_string(Partition{3, 2}, {1}, 4), std::invalid_argument);
  EXPECT_THROW(check_string(Partition{2}, {}, 2), std::invalid_argument);
  EXPECT_THROW(check_dilaton(Partition{2, 2}, {1}, 1), std::invalid_argument);
}

TEST(TripleFits, FixedK) {
  TripleFitReport r = fit_triple_poly_fixed(4, 2, 2, Partition{2, 2});
  EXPECT_TRUE(r.fit.within_bound);
  EXPECT_EQ(Rat(r.fit.bound), Rat(2) * r.genus);
  for (int d = 3; d <= 6; ++d)
    for (int m = 1; m <= d; ++m)
      for (int n = 1; n <= d; ++n) {
        TripleFitReport t = fit_triple_poly_fixed(d, m, n, Partition{3, 2});
        if (t.genus.get_den() == 1 && t.genus >= 0) {
          EXPECT_TRUE(t.fit.within_bound) << d << " " << m << " " << n;
        }
      }
  TripleFitReport one = fit_triple_poly_fixed(5, 3, 1, Partition{2});
  EXPECT_EQ(one.fit.points, 1u);
}

TEST(TripleFits, Joint) {
  TripleFitReport r = fit_triple_poly_joint(4, 4, 2, 3, 1);
  EXPECT_EQ(r.fit.bound, 7);
  EXPECT_TRUE(r.fit.within_bound);
  for (int m = 1; m <= 5; ++m)
    for (int s = 1; s <= 3; ++s) {
      TripleFitReport t = fit_triple_poly_joint(5, m, 2, 5, s);
      EXPECT_TRUE(t.fit.within_bound) << m << " " << s;
      EXPECT_LE(t.fit.min_degree, 10);
    }
  EXPECT_THROW(fit_triple_poly_joint(4, 5, 2, 3, 1), std::invalid_argument);
}
