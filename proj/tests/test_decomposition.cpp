#include "hurwitz/decomposition.hpp"

#include <gtest/gtest.h>

#include <chrono>

using namespace hurwitz;

TEST(RhoPolynomial, Expansion) {
  EXPECT_EQ(rho_poly(Partition{1}).coeffs, (std::vector<Rat>{-1, 1}));
  // x^3 - x^2 y - x y^2 + y^3
  EXPECT_EQ(rho_poly(Partition{2, 1}).coeffs, (std::vector<Rat>{1, -1, -1, 1}));
  for (int d = 1; d <= 8; ++d)
    for (auto& beta : partitions_of(d)) {
      BiPoly p = rho_poly(beta);
      EXPECT_EQ(p.d, d);
      EXPECT_TRUE(p.in_hat_space());
      EXPECT_EQ(p.swapped(), p * Rat(beta.length() % 2 == 0 ? 1 : -1));
      // direct product of (x^b - y^b) at a sample point
      Rat x = make_rat(3, 2), y = make_rat(-2, 5), direct = 1;
      for (int b : beta.parts()) direct *= pow(x, b) - pow(y, b);
      EXPECT_EQ(p.evaluate(x, y), direct);
    }
  EXPECT_THROW(rho_poly(Partition{}), std::invalid_argument);
}

TEST(RhoDerivatives, Values) {
  EXPECT_EQ(rho_k(Partition{2, 1}, 2), 4);
  for (int d = 1; d <= 8; ++d)
    for (auto& beta : partitions_of(d)) {
      for (int k = 0; k < beta.length(); ++k) EXPECT_EQ(rho_k(beta, k), 0);
      for (int k = 0; k <= d + 1; ++k) EXPECT_EQ(detail::rho_k_multinomial(beta, k), detail::rho_k_derivative(beta, k));
    }
  for (int d = 1; d <= 7; ++d)
    for (int i = 1; i <= d; ++i)
      for (int k = 0; k <= d; ++k) EXPECT_EQ(rho_k_theta(i, d, k), rho_k(theta(i, d), k));
  EXPECT_THROW(rho_k(Partition{1}, -1), std::invalid_argument);
}

TEST(HookBasis, Examples) {
  DecompCoeffs a = decompose(Partition{2, 1});
  EXPECT_EQ(a[2], 1);
  EXPECT_EQ(a[1], 0);
  EXPECT_EQ(a[3], 0);
  for (int d = 1; d <= 8; ++d) {
    DecompCoeffs c = decompose(Partition{d});
    for (int i = 1; i <= d; ++i) EXPECT_EQ(c[i], i == d ? Rat(1) : Rat(0));
  }
  DecompCoeffs b = decompose(Partition{2, 2});
  EXPECT_EQ(b[4], 0);
  EXPECT_EQ(b[2], 0);
  EXPECT_EQ(b[1], make_rat(-1, 3));
  EXPECT_EQ(b[3], make_rat(4, 3));
  // independent check of (2,2) by expansion
  BiPoly r = rho_poly(theta(1, 4)) * make_rat(-1, 3);
  r += rho_poly(theta(3, 4)) * make_rat(4, 3);
  EXPECT_EQ(r, rho_poly(Partition{2, 2}));
}

TEST(HookBasis, ExactReconstructionAndVanishing) {
  auto t0 = std::chrono::steady_clock::now();
  for (int d = 1; d <= 12; ++d)
    for (auto& beta : partitions_of(d)) {
      DecompCoeffs a = decompose(beta);
      EXPECT_EQ(a.reconstruct(), rho_poly(beta)) << beta.to_string();
      EXPECT_TRUE(a.vanishing_holds(beta.length())) << beta.to_string();
      EXPECT_EQ(detail::decompose_reduced(beta), detail::decompose_full(beta));
    }
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 10.0);
}

TEST(HookBasis, EvaluationBridge) {
  // a_i are pinned by x-derivatives at (1,1); check the values the solver
  // never looked at, namely the polynomial at other points.
  for (auto& beta : partitions_of(7)) {
    DecompCoeffs a = decompose(beta);
    for (int x = -2; x <= 2; ++x) {
      Rat lhs = rho_poly(beta).evaluate(x, 3);
      Rat rhs = 0;
      for (int i = 1; i <= 7; ++i) rhs += a[i] * rho_poly(theta(i, 7)).evaluate(x, 3);
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(HookAssembly, Constant) {
  // |C_(2,2)| / (2! |C_theta_1|) with theta_1 = [1,1,1,1]
  EXPECT_EQ(hook_term_constant(Partition{2}, Partition{2, 2}, 1), make_rat(3, 2));
  EXPECT_EQ(hook_term_constant(Partition{3}, Partition{3, 1}, 3), make_rat(1, 6));
}

TEST(HookAssembly, MatchesOnePart) {
  EXPECT_EQ(h_via_hooks(4, 2, Partition{2, 2}, Partition{2, 2}), h_onepart(4, 2, Partition{2, 2}, Partition{2, 2}));
  EXPECT_EQ(h_via_hooks(5, 5, Partition{3, 2}, Partition{3, 1, 1}), h_double_onepart(5, Partition{3, 2}, Partition{3, 1, 1}));
  for (int d = 1; d <= 6; ++d)
    for (auto& K : partitions_up_to(4)) {
      if (K.empty()) continue;
      for (auto& beta : partitions_of(d))
        for (int m = 1; m <= d; ++m) EXPECT_EQ(h_via_hooks(d, m, K, beta), h_onepart(d, m, K, beta)) << d << " " << m << " " << K.to_string() << " " << beta.to_string();
    }
  EXPECT_THROW(h_via_hooks(3, 1, Partition{}, Partition{3}), std::invalid_argument);
  EXPECT_THROW(h_via_hooks(3, 1, Partition{2}, Partition{2}), std::invalid_argument);
}
