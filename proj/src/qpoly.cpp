#include "tetraposet/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace tetraposet {

QPolynomial::QPolynomial(Int constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPolynomial QPolynomial::monomial(Int coeff, int degree) {
  QPolynomial p;
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  if (coeff != 0) {
    p.coeffs_.assign(degree + 1, Int(0));
    p.coeffs_[degree] = std::move(coeff);
  }
  return p;
}

QPolynomial QPolynomial::from_coeffs(std::vector<Int> coeffs) {
  QPolynomial p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

Int QPolynomial::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[d];
}

Int QPolynomial::eval_at_one() const {
  Int s = 0;
  for (const Int& c : coeffs_) s += c;
  return s;
}

Int QPolynomial::eval(const Int& q) const {
  Int s = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) s = s * q + *it;
  return s;
}

QPolynomial QPolynomial::reversed() const {
  std::vector<Int> rev(coeffs_.rbegin(), coeffs_.rend());
  return from_coeffs(std::move(rev));
}

bool QPolynomial::is_palindromic() const { return *this == reversed(); }

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPolynomial QPolynomial::pow(int e) const {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  QPolynomial result = one();
  QPolynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool QPolynomial::divide(const QPolynomial& num, const QPolynomial& den, QPolynomial& quot,
                         QPolynomial& rem) {
  if (den.is_zero()) return false;
  std::vector<Int> r = num.coeffs_;
  int dd = den.degree();
  const Int& lead = den.coeffs_.back();
  std::vector<Int> q;
  if (static_cast<int>(r.size()) - 1 >= dd) q.assign(r.size() - dd, Int(0));
  while (static_cast<int>(r.size()) - 1 >= dd) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (static_cast<int>(r.size()) - 1 < dd) break;
    Int c = r.back();
    if (c % lead != 0) return false;
    Int factor = c / lead;
    int shift = static_cast<int>(r.size()) - 1 - dd;
    q[shift] = factor;
    for (int i = 0; i <= dd; ++i) r[shift + i] -= factor * den.coeffs_[i];
  }
  quot = from_coeffs(std::move(q));
  rem = from_coeffs(std::move(r));
  return true;
}

QPolynomial QPolynomial::exact_div(const QPolynomial& den) const {
  QPolynomial q, r;
  if (!divide(*this, den, q, r) || !r.is_zero())
    throw std::domain_error("exact_div: division leaves a remainder");
  return q;
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = 0; d <= degree(); ++d) {
    const Int& c = coeffs_[d];
    if (c == 0) continue;
    Int a = c < 0 ? Int(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool show_coeff = (a != 1) || d == 0;
    if (show_coeff) out += a.str();
    if (d >= 1) {
      out += "q";
      if (d >= 2) out += "^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace tetraposet
