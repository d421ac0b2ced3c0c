#include "hurwitz/memo.hpp"
#include "hurwitz/numbers.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/series.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

using namespace hurwitz;

namespace {

// Stirling numbers by brute force over set partitions / permutations.
long count_set_partitions(int k, int m) {
  // restricted growth strings
  long count = 0;
  std::vector<int> a(static_cast<size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int pos, int used) {
    if (pos == k) {
      if (used == m) ++count;
      return;
    }
    for (int b = 0; b <= used && b < m; ++b) {
      a[static_cast<size_t>(pos)] = b;
      rec(pos + 1, std::max(used, b + 1));
    }
  };
  if (k == 0) return m == 0 ? 1 : 0;
  rec(0, 0);
  return count;
}

long count_perms_with_cycles(int n, int k) {
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  long count = 0;
  do {
    std::vector<bool> seen(static_cast<size_t>(n), false);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
      if (seen[static_cast<size_t>(i)]) continue;
      ++cycles;
      for (int j = i; !seen[static_cast<size_t>(j)]; j = p[static_cast<size_t>(j)]) seen[static_cast<size_t>(j)] = true;
    }
    if (cycles == k) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace

TEST(Rational, MakeRatCanonicalizes) {
  EXPECT_EQ(make_rat(0, 3), Rat(0));
  EXPECT_EQ(make_rat(2, 4), make_rat(1, 2));
  EXPECT_EQ(to_string(make_rat(3, -6)), "-1/2");
  EXPECT_THROW(make_rat(1, 0), std::domain_error);
}

TEST(Rational, StringFormAlwaysHasDenominator) {
  EXPECT_EQ(to_string(Rat(0)), "0/1");
  EXPECT_EQ(to_string(Rat(5)), "5/1");
  EXPECT_EQ(to_string(make_rat(-7, 5760)), "-7/5760");
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0/1", "1/2", "-7/5760", "12345678901234567890/7"}) EXPECT_EQ(to_string(parse_rat(s)), s);
  EXPECT_EQ(parse_rat("4/8"), make_rat(1, 2));
  EXPECT_EQ(parse_rat("3"), Rat(3));
  EXPECT_THROW(parse_rat("x/2"), std::invalid_argument);
  EXPECT_THROW(parse_rat("1/0"), std::domain_error);
}

TEST(Combinatorics, Factorial) {
  BigInt f = 1;
  for (long n = 0; n <= 25; ++n) {
    if (n > 0) f *= n;
    EXPECT_EQ(factorial(n), f);
  }
  EXPECT_THROW(factorial(-1), std::domain_error);
}

TEST(Combinatorics, BinomialPascal) {
  for (long n = 1; n <= 20; ++n)
    for (long k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1));
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  // polynomial extension: C(-1, k) = (-1)^k
  for (long k = 0; k < 6; ++k) EXPECT_EQ(binomial(-1, k), BigInt(sign_pow(k)));
  EXPECT_EQ(binomial(-2, 3), -4);
}

TEST(Combinatorics, FallingFactorial) {
  EXPECT_EQ(falling_factorial(5L, 0L), 1);
  EXPECT_EQ(falling_factorial(5L, 3L), 60);
  EXPECT_EQ(falling_factorial(2L, 3L), 0);
  EXPECT_EQ(falling_factorial(make_rat(1, 2), 2), make_rat(-1, 4));
  EXPECT_THROW(falling_factorial(3L, -1L), std::domain_error);
}

TEST(Combinatorics, Stirling2AgainstEnumeration) {
  for (int k = 0; k <= 8; ++k)
    for (int m = 0; m <= k + 1; ++m) EXPECT_EQ(stirling2(k, m), BigInt(count_set_partitions(k, m))) << k << "," << m;
  EXPECT_EQ(stirling2(3, 2), 3);
  EXPECT_EQ(stirling2(4, 0), 0);
  EXPECT_EQ(stirling2(6, 6), 1);
}

TEST(Combinatorics, Stirling1AgainstEnumeration) {
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n + 1; ++k) EXPECT_EQ(stirling1_unsigned(n, k), BigInt(count_perms_with_cycles(n, k))) << n << "," << k;
  EXPECT_EQ(stirling1_unsigned(4, 2), 11);
  EXPECT_EQ(stirling1_unsigned(5, 0), 0);
}

TEST(Bernoulli, Numbers) {
  const std::vector<Rat> expected{1, make_rat(-1, 2), make_rat(1, 6), 0, make_rat(-1, 30), 0, make_rat(1, 42), 0,
                                  make_rat(-1, 30), 0, make_rat(5, 66), 0, make_rat(-691, 2730)};
  for (size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(bernoulli_number(static_cast<long>(n)), expected[n]) << n;
}

TEST(Bernoulli, PolynomialOfOrder) {
  EXPECT_EQ(bernoulli_poly_order(0, 3, make_rat(5, 7)), 1);
  EXPECT_EQ(bernoulli_poly_order(2, 1, 0), make_rat(1, 6));
  for (int z = -3; z <= 3; ++z) {
    EXPECT_EQ(bernoulli_poly_order(1, 1, z), Rat(z) - make_rat(1, 2));
    // B_2(z) = z^2 - z + 1/6
    EXPECT_EQ(bernoulli_poly_order(2, 1, z), Rat(z * z - z) + make_rat(1, 6));
  }
  // order 2 at z = 0: 2! [x^2] (x/(e^x-1))^2 = 2 (1/4 + 2/12) = 5/6
  EXPECT_EQ(bernoulli_poly_order(2, 2, 0), make_rat(5, 6));
  // B^{(N)}_n(z + 1) - B^{(N)}_n(z) = n B^{(N-1)}_{n-1}(z)
  for (long n = 1; n <= 6; ++n)
    for (long order = 1; order <= 3; ++order)
      EXPECT_EQ(bernoulli_poly_order(n, order, make_rat(3, 2)) - bernoulli_poly_order(n, order, make_rat(1, 2)),
                Rat(n) * bernoulli_poly_order(n - 1, order - 1, make_rat(1, 2)));
}

TEST(Zeta, NegativeIntegers) {
  EXPECT_EQ(zeta_neg(0), make_rat(-1, 2));
  EXPECT_EQ(zeta_neg(1), make_rat(-1, 12));
  EXPECT_EQ(zeta_neg(2), 0);
  EXPECT_EQ(zeta_neg(3), make_rat(1, 120));
  EXPECT_EQ(zeta_neg(5), make_rat(-1, 252));
  EXPECT_THROW(zeta_neg(-1), std::domain_error);
}

TEST(Series, ExpLogInverse) {
  TruncSeries s({"x", "y"}, {5, 4});
  s.add_term({1, 0}, make_rat(1, 3));
  s.add_term({0, 1}, -2);
  s.add_term({2, 1}, make_rat(5, 7));
  EXPECT_EQ(s.exp().log(), s);
  TruncSeries e = TruncSeries::monomial({"x"}, {6}, "x", 1).exp();
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(e.coeff({n}), make_rat(1, factorial(n)));
}

TEST(Series, TruncationAndDerivative) {
  TruncSeries x = TruncSeries::monomial({"x"}, {3}, "x", 1);
  TruncSeries p = (x + x.constant_like(1)).pow(5);
  EXPECT_EQ(p.coeff({3}), 10);
  EXPECT_EQ(p.degree_in("x"), 3);
  EXPECT_EQ(p.derivative("x").coeff({1}), 20);
}

TEST(Memo, ComputesOnce) {
  detail::Memo<int, int> memo;
  int calls = 0;
  EXPECT_EQ(memo.get(3, [&] { ++calls; return 9; }), 9);
  EXPECT_EQ(memo.get(3, [&] { ++calls; return 0; }), 9);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(memo.size(), 1u);
  EXPECT_FALSE(memo.find(4).has_value());
}
