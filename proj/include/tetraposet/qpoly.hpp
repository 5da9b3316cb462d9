#pragma once

#include <string>
#include <vector>

#include "tetraposet/bigint.hpp"

namespace tetraposet {

// Dense univariate polynomial in q with exact integer coefficients,
// ascending by degree, no trailing zeros.
class QPolynomial {
 public:
  QPolynomial() = default;  // zero polynomial
  explicit QPolynomial(Int constant);
  static QPolynomial monomial(Int coeff, int degree);
  static QPolynomial from_coeffs(std::vector<Int> coeffs);
  static QPolynomial one() { return QPolynomial(Int(1)); }

  const std::vector<Int>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  Int coeff(int d) const;
  Int eval_at_one() const;
  Int eval(const Int& q) const;

  // Coefficient list reversed (q^deg * p(1/q)); the rank generating function
  // of a dual poset.
  QPolynomial reversed() const;
  bool is_palindromic() const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const QPolynomial& a, const QPolynomial& b) { return !(a == b); }

  QPolynomial pow(int e) const;

  // Long division. Returns false (leaving quot/rem untouched) if some step
  // needs a non-exact integer division of leading coefficients.
  static bool divide(const QPolynomial& num, const QPolynomial& den, QPolynomial& quot,
                     QPolynomial& rem);
  // Division known to be exact; throws std::domain_error on remainder.
  QPolynomial exact_div(const QPolynomial& den) const;

  std::string to_string() const;  // e.g. "1 + 2q + q^3"

 private:
  void trim();
  std::vector<Int> coeffs_;
};

}  // namespace tetraposet
