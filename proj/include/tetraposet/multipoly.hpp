#pragma once

#include <map>
#include <string>
#include <vector>

#include "tetraposet/bigint.hpp"

namespace tetraposet {

// Exact multivariate polynomial in lambda, x_1, ..., x_n. Exponent vectors
// have fixed length nvars+1 with lambda at index 0 and x_k at index k; terms
// live in a map keyed by exponent vector, so iteration order (and hence
// printing and serialization) is deterministic.
class MultiPolynomial {
 public:
  explicit MultiPolynomial(int nvars = 0) : nvars_(nvars) {}

  static MultiPolynomial monomial(int nvars, const std::vector<int>& exps, Int coeff);
  static MultiPolynomial constant(int nvars, Int value);

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coeff(const std::vector<int>& exps) const;

  MultiPolynomial& operator+=(const MultiPolynomial& o);
  MultiPolynomial& operator*=(const MultiPolynomial& o);
  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator*(MultiPolynomial a, const MultiPolynomial& b) { return a *= b; }

  friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPolynomial& a, const MultiPolynomial& b) { return !(a == b); }

  // Substitute integers for every variable (index 0 = lambda).
  Int eval(const std::vector<Int>& values) const;

  // Terms in map order, e.g. "x1^2 x2 + L x1 x2 x3 + 2 L^2" with L = lambda.
  std::string to_string() const;

 private:
  void prune();

  int nvars_ = 0;
  std::map<std::vector<int>, Int> terms_;
};

}  // namespace tetraposet
