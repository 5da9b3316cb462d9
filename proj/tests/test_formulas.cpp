#include "tetraposet/formulas.hpp"

#include <gtest/gtest.h>

#include <vector>

namespace tetraposet {
namespace {

TEST(QBasics, SmallValues) {
  EXPECT_EQ(q_int(1), QPolynomial::one());
  EXPECT_EQ(q_int(4), QPolynomial::from_coeffs({1, 1, 1, 1}));
  EXPECT_EQ(q_factorial(0), QPolynomial::one());
  EXPECT_EQ(q_factorial(3).eval_at_one(), 6);
  EXPECT_EQ(q_binomial(3, 1), QPolynomial::from_coeffs({1, 1, 1}));
  EXPECT_EQ(q_binomial(4, 2), QPolynomial::from_coeffs({1, 1, 2, 1, 1}));
  EXPECT_EQ(q_binomial(5, 0), QPolynomial::one());
  EXPECT_EQ(q_binomial(3, 5), QPolynomial());
  EXPECT_THROW(q_int(-1), std::invalid_argument);
  EXPECT_THROW(q_binomial(-2, 1), std::invalid_argument);
}

TEST(QBasics, BinomialAgreesWithFactorialQuotient) {
  for (int m = 0; m <= 8; ++m)
    for (int k = 0; k <= m; ++k)
      EXPECT_EQ(q_binomial(m, k) * q_factorial(k) * q_factorial(m - k),
                q_factorial(m));
}

TEST(CarlitzRiordan, FirstPolynomials) {
  EXPECT_EQ(carlitz_riordan(0), QPolynomial::one());
  EXPECT_EQ(carlitz_riordan(1), QPolynomial::one());
  EXPECT_EQ(carlitz_riordan(2), QPolynomial::from_coeffs({1, 1}));
  EXPECT_EQ(carlitz_riordan(3), QPolynomial::from_coeffs({1, 2, 1, 1}));
  EXPECT_EQ(carlitz_riordan(4).eval_at_one(), 14);
  for (int m = 0; m <= 9; ++m)
    EXPECT_EQ(carlitz_riordan(m).eval_at_one(), catalan(m));
}

TEST(MacMahon, QCatalanValues) {
  EXPECT_EQ(macmahon_q_catalan(0), QPolynomial::one());
  EXPECT_EQ(macmahon_q_catalan(1), QPolynomial::one());
  EXPECT_EQ(macmahon_q_catalan(2).eval_at_one(), 2);
  EXPECT_EQ(macmahon_q_catalan(3).eval_at_one(), 5);
  for (int p = 0; p <= 8; ++p)
    EXPECT_EQ(macmahon_q_catalan(p).eval_at_one(), catalan(p));
}

TEST(Counts, IntegerSequences) {
  const std::vector<long long> asms = {1, 2, 7, 42, 429, 7436, 218348};
  const std::vector<long long> tspps = {1, 2, 5, 16, 66, 352, 2431};
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(asm_count(n), asms[n - 1]) << n;
    EXPECT_EQ(tspp_count(n), tspps[n - 1]) << n;
  }
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(binomial(10, 5), 252);
  EXPECT_EQ(catalan(5), 42);
  EXPECT_EQ(catalan_product_count(4), 2 * 5 * 14);
}

TEST(ClassFormulas, SmallClosedForms) {
  EXPECT_EQ(empty_class_gf(3), QPolynomial::from_coeffs({1, 1}).pow(4));
  EXPECT_EQ(single_color_gf(4),
            q_int(4) * q_int(3).pow(2) * q_int(2).pow(3));
  EXPECT_EQ(two_opposite_gf(3), q_binomial(3, 1) * q_binomial(3, 2));
  EXPECT_EQ(carlitz_product(3), carlitz_riordan(2) * carlitz_riordan(3));
  // (1+q)^{n-1} (1+q^2)^{n-2} ... for the nice three-color class.
  EXPECT_EQ(three_nice_gf(4),
            QPolynomial::from_coeffs({1, 1}).pow(3) *
                QPolynomial::from_coeffs({1, 0, 1}).pow(2) *
                QPolynomial::from_coeffs({1, 0, 0, 1}));
  EXPECT_EQ(three_nice_gf(4).eval_at_one(), 64);  // 2^{C(4,2)}
}

TEST(SundquistA, PinnedSpecializations) {
  EXPECT_EQ(sundquist_A(2, 2).eval_at_one(), 2);
  EXPECT_EQ(sundquist_A(3, 2).eval_at_one(), 7);
  EXPECT_EQ(sundquist_A(2, 3), macmahon_q_catalan(3));
  for (int n = 1; n <= 6; ++n)
    EXPECT_EQ(sundquist_A(n, 2), q_asm_product(n)) << n;
  for (int p = 1; p <= 6; ++p)
    EXPECT_EQ(sundquist_A(2, p), macmahon_q_catalan(p)) << p;
}

TEST(SundquistA, RemainderFreeGrid) {
  // The defining product divides exactly for every n, p <= 5; a remainder
  // would throw from the exact division.
  for (int n = 1; n <= 5; ++n)
    for (int p = 1; p <= 5; ++p) {
      QPolynomial a = sundquist_A(n, p);
      EXPECT_FALSE(a.is_zero());
      EXPECT_GT(a.eval_at_one(), 0);
    }
}

TEST(QAsmProduct, MatchesCountsAtOne) {
  for (int n = 1; n <= 7; ++n)
    EXPECT_EQ(q_asm_product(n).eval_at_one(), asm_count(n));
}

TEST(QTsppProduct, PolynomialAtSmallN) {
  for (int n = 1; n <= 5; ++n) {
    auto p = q_tspp_product(n);
    ASSERT_TRUE(p.has_value()) << n;
    EXPECT_EQ(p->eval_at_one(), tspp_count(n));
  }
}

TEST(Dispatch, RankGfFormulaPerClass) {
  EXPECT_EQ(rank_gf_formula(ColorSet::from_string(""), 3),
            empty_class_gf(3));
  EXPECT_EQ(rank_gf_formula(ColorSet::from_string("y"), 4),
            single_color_gf(4));
  EXPECT_EQ(rank_gf_formula(ColorSet::from_string("go"), 3),
            two_opposite_gf(3));
  EXPECT_EQ(rank_gf_formula(ColorSet::from_string("bg"), 4),
            carlitz_product(4));
  // Dual two-adjacent sets reverse the coefficients.
  EXPECT_EQ(rank_gf_formula(ColorSet::from_string("gy"), 4),
            carlitz_product(4).reversed());
  EXPECT_EQ(rank_gf_formula(ColorSet::from_string("gyo"), 5),
            three_nice_gf(5));
  EXPECT_THROW(rank_gf_formula(ColorSet::from_string("rgy"), 3), NoFormulaError);
  EXPECT_THROW(rank_gf_formula(ColorSet::from_string("bgoy"), 3), NoFormulaError);
  EXPECT_THROW(rank_gf_formula(ColorSet::from_string("rbgoys"), 3), NoFormulaError);
}

TEST(Dispatch, CountFormulaPerClass) {
  EXPECT_EQ(count_formula(ColorSet::from_string(""), 3), 16);
  EXPECT_EQ(count_formula(ColorSet::from_string("bgoy"), 5), 429);
  EXPECT_EQ(count_formula(ColorSet::from_string("rgys"), 4), 42);
  EXPECT_EQ(count_formula(ColorSet::from_string("rbgoys"), 6), 352);
  EXPECT_EQ(count_formula(ColorSet::from_string("gs"), 4), catalan_product_count(4));
  EXPECT_THROW(count_formula(ColorSet::from_string("bgs"), 3), NoFormulaError);
  EXPECT_THROW(count_formula(ColorSet::from_string("bgoys"), 3), NoFormulaError);
  EXPECT_THROW(count_formula(ColorSet::from_string("rbgys"), 3), NoFormulaError);
}

}  // namespace
}  // namespace tetraposet
