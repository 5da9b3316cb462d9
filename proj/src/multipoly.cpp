#include "tetraposet/multipoly.hpp"

#include <stdexcept>

namespace tetraposet {

MultiPolynomial MultiPolynomial::monomial(int nvars, const std::vector<int>& exps, Int coeff) {
  if ((int)exps.size() != nvars + 1)
    throw std::invalid_argument("monomial: exponent vector has wrong length");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("monomial: negative exponent");
  MultiPolynomial p(nvars);
  if (coeff != 0) p.terms_[exps] = std::move(coeff);
  return p;
}

MultiPolynomial MultiPolynomial::constant(int nvars, Int value) {
  return monomial(nvars, std::vector<int>(nvars + 1, 0), std::move(value));
}

Int MultiPolynomial::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Int(0) : it->second;
}

void MultiPolynomial::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("operator+=: variable count mismatch");
  for (const auto& [e, c] : o.terms_) terms_[e] += c;
  prune();
  return *this;
}

MultiPolynomial& MultiPolynomial::operator*=(const MultiPolynomial& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("operator*=: variable count mismatch");
  std::map<std::vector<int>, Int> prod;
  std::vector<int> e(nvars_ + 1);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i <= nvars_; ++i) e[i] = ea[i] + eb[i];
      prod[e] += ca * cb;
    }
  terms_ = std::move(prod);
  prune();
  return *this;
}

Int MultiPolynomial::eval(const std::vector<Int>& values) const {
  if ((int)values.size() != nvars_ + 1) throw std::invalid_argument("eval: wrong value count");
  Int total = 0;
  for (const auto& [e, c] : terms_) {
    Int term = c;
    for (int i = 0; i <= nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term *= values[i];
    total += term;
  }
  return total;
}

std::string MultiPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int i = 0; i <= nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += i == 0 ? "L" : "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += c.str();
    } else if (c == 1) {
      out += mono;
    } else if (c == -1) {
      out += "-" + mono;
    } else {
      out += c.str() + " " + mono;
    }
  }
  return out;
}

}  // namespace tetraposet
