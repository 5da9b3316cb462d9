#include "tetraposet/qpoly.hpp"

#include <gtest/gtest.h>

namespace tetraposet {
namespace {

TEST(QPolynomial, ZeroAndConstants) {
  QPolynomial zero;
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.degree(), -1);
  EXPECT_EQ(zero.eval_at_one(), 0);

  QPolynomial five{Int(5)};
  EXPECT_EQ(five.degree(), 0);
  EXPECT_EQ(five.coeff(0), 5);
  EXPECT_EQ(five.coeff(3), 0);
  EXPECT_EQ(five.to_string(), "5");
}

TEST(QPolynomial, ArithmeticAndTrim) {
  QPolynomial a = QPolynomial::from_coeffs({1, 2, 1});     // (1+q)^2
  QPolynomial b = QPolynomial::from_coeffs({-1, -2, -1});
  EXPECT_TRUE((a + b).is_zero());

  QPolynomial q = QPolynomial::monomial(1, 1);
  EXPECT_EQ((a * q).coeffs(), (std::vector<Int>{0, 1, 2, 1}));
  EXPECT_EQ(QPolynomial::from_coeffs({1, 1}).pow(2), a);
  EXPECT_EQ(a.pow(0), QPolynomial::one());

  QPolynomial c = QPolynomial::from_coeffs({3, 0, 0, 7});
  EXPECT_EQ(c.eval(Int(10)), 7003);
  EXPECT_EQ(c.eval_at_one(), 10);
}

TEST(QPolynomial, ReversalAndPalindromes) {
  QPolynomial p = QPolynomial::from_coeffs({1, 3, 2});
  EXPECT_EQ(p.reversed().coeffs(), (std::vector<Int>{2, 3, 1}));
  EXPECT_EQ(p.reversed().reversed(), p);
  EXPECT_FALSE(p.is_palindromic());
  EXPECT_TRUE(QPolynomial::from_coeffs({1, 4, 1}).is_palindromic());
  EXPECT_TRUE(QPolynomial::one().is_palindromic());
}

TEST(QPolynomial, ExactDivision) {
  QPolynomial num = QPolynomial::from_coeffs({1, 1}).pow(3);
  QPolynomial den = QPolynomial::from_coeffs({1, 2, 1});
  EXPECT_EQ(num.exact_div(den), QPolynomial::from_coeffs({1, 1}));

  QPolynomial quot, rem;
  ASSERT_TRUE(QPolynomial::divide(num, den, quot, rem));
  EXPECT_TRUE(rem.is_zero());

  QPolynomial off = QPolynomial::from_coeffs({2, 2, 1});
  EXPECT_THROW(num.exact_div(off), std::domain_error);
}

TEST(QPolynomial, FromCoeffsDropsTrailingZeros) {
  QPolynomial p = QPolynomial::from_coeffs({1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(p, QPolynomial::from_coeffs({1, 2}));
}

}  // namespace
}  // namespace tetraposet
