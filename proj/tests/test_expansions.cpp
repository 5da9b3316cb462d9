#include "tetraposet/expansions.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "tetraposet/formulas.hpp"

namespace tetraposet {
namespace {

MultiPolynomial mono(int nvars, std::vector<int> exps, long long c = 1) {
  return MultiPolynomial::monomial(nvars, exps, Int(c));
}

TEST(MultiPolynomial, Basics) {
  MultiPolynomial p = mono(2, {0, 1, 0}) + mono(2, {1, 0, 1});
  EXPECT_EQ(p.nvars(), 2);
  EXPECT_EQ(p.coeff({0, 1, 0}), Int(1));
  EXPECT_EQ(p.coeff({2, 0, 0}), Int(0));
  EXPECT_EQ(p.eval({Int(2), Int(3), Int(5)}), Int(13));
  EXPECT_EQ(p.to_string(), "x1 + L x2");

  MultiPolynomial sq = p * p;
  EXPECT_EQ(sq.coeff({1, 1, 1}), Int(2));
  EXPECT_EQ(sq.coeff({2, 0, 2}), Int(1));

  // Cancellation prunes to zero.
  MultiPolynomial z = mono(1, {0, 1}) + mono(1, {0, 1}, -1);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(MultiPolynomial::constant(3, Int(4)).eval(
                {Int(9), Int(9), Int(9), Int(9)}),
            Int(4));

  EXPECT_THROW(mono(2, {0, 1}), std::invalid_argument);
  EXPECT_THROW(mono(1, {0, -1}), std::invalid_argument);
  EXPECT_THROW(mono(1, {0, 1}) + mono(2, {0, 1, 0}), std::invalid_argument);
  EXPECT_THROW(p.eval({Int(1), Int(1)}), std::invalid_argument);
}

TEST(Expansions, TwoPlayerGame) {
  MultiPolynomial want = mono(2, {0, 1, 0}) + mono(2, {1, 0, 1});
  EXPECT_EQ(tournament_gf(2), want);
  EXPECT_EQ(tournament_expansion(2), want);
  EXPECT_EQ(asm_expansion(2), want);
  EXPECT_EQ(tsscpp_expansion(2), want);
  EXPECT_EQ(tsscpp_binomial_sum(2), QPolynomial::from_coeffs({1, 1}));
}

// The full three-player expansion, one monomial per game record.
TEST(Expansions, PinnedThreePlayerPolynomial) {
  MultiPolynomial want = mono(3, {0, 2, 1, 0}) + mono(3, {1, 1, 2, 0}) +
                         mono(3, {1, 1, 1, 1}) + mono(3, {1, 2, 0, 1}) +
                         mono(3, {2, 1, 0, 2}) + mono(3, {2, 0, 2, 1}) +
                         mono(3, {2, 1, 1, 1}) + mono(3, {3, 0, 1, 2});
  EXPECT_EQ(tournament_gf(3), want);
  EXPECT_EQ(asm_expansion(3), want);
  EXPECT_EQ(tsscpp_expansion(3), want);
  EXPECT_EQ(want.eval({Int(1), Int(1), Int(1), Int(1)}), Int(8));
}

TEST(Expansions, ProductEqualsBothArrayExpansions) {
  for (int n = 1; n <= 4; ++n) {
    MultiPolynomial product = tournament_gf(n);
    EXPECT_EQ(product, tournament_expansion(n)) << n;
    EXPECT_EQ(product, asm_expansion(n)) << n;
    EXPECT_EQ(product, tsscpp_expansion(n)) << n;

    // The upset-free tournament contributes the lone lambda-free monomial
    // prod x_i^{n-i}.
    std::vector<int> exps(n + 1, 0);
    for (int i = 1; i <= n; ++i) exps[i] = n - i;
    EXPECT_EQ(product.coeff(exps), Int(1)) << n;
  }
}

TEST(Expansions, BinomialSumAndCorollaries) {
  for (int n = 1; n <= 6; ++n) {
    const int games = n * (n - 1) / 2;
    EXPECT_EQ(tsscpp_binomial_sum(n),
              QPolynomial::from_coeffs({1, 1}).pow(games))
        << n;
    EXPECT_EQ(sum_two_pow_strict(n), Int(1) << games) << n;
    EXPECT_EQ(sum_shuffle_fibers(n), Int(1) << games) << n;
  }
}

}  // namespace
}  // namespace tetraposet
