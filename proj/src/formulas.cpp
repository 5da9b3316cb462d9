#include "tetraposet/formulas.hpp"

#include <algorithm>
#include <vector>

namespace tetraposet {

QPolynomial q_int(int m) {
  if (m < 0) throw std::invalid_argument("q_int: negative argument");
  return QPolynomial::from_coeffs(std::vector<Int>(m, Int(1)));
}

QPolynomial q_factorial(int m) {
  if (m < 0) throw std::invalid_argument("q_factorial: negative argument");
  QPolynomial p = QPolynomial::one();
  for (int i = 1; i <= m; ++i) p *= q_int(i);
  return p;
}

QPolynomial q_binomial(int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("q_binomial: negative argument");
  if (k > m) return QPolynomial();
  // [m k] = [m-1 k-1] + q^k [m-1 k]; row by row.
  std::vector<QPolynomial> row(m + 1);
  row[0] = QPolynomial::one();
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      QPolynomial shifted = row[j] * QPolynomial::monomial(Int(1), j);
      row[j] = row[j - 1] + shifted;
    }
  }
  return row[k];
}

QPolynomial carlitz_riordan(int m) {
  static std::vector<QPolynomial> cache{QPolynomial::one()};
  while (static_cast<int>(cache.size()) <= m) {
    int j = static_cast<int>(cache.size());
    QPolynomial c;
    for (int k = 1; k <= j; ++k)
      c += QPolynomial::monomial(Int(1), k - 1) * cache[k - 1] * cache[j - k];
    cache.push_back(c);
  }
  return cache[m];
}

QPolynomial macmahon_q_catalan(int p) {
  return q_binomial(2 * p, p).exact_div(q_int(p + 1));
}

Int factorial(int m) {
  Int f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

Int binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (m - i);
    r /= (i + 1);
  }
  return r;
}

Int catalan(int m) { return binomial(2 * m, m) / (m + 1); }

Int asm_count(int n) {
  Int num = 1, den = 1;
  for (int j = 0; j <= n - 1; ++j) {
    num *= factorial(3 * j + 1);
    den *= factorial(n + j);
  }
  return num / den;
}

Int tspp_count(int n) {
  Int num = 1, den = 1;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j)
      for (int k = j; k <= n - 1; ++k) {
        num *= (i + j + k - 1);
        den *= (i + j + k - 2);
      }
  return num / den;
}

Int catalan_product_count(int n) {
  Int r = 1;
  for (int j = 2; j <= n; ++j) r *= catalan(j);
  return r;
}

QPolynomial empty_class_gf(int n) {
  Int elements = binomial(n + 1, 3);
  return q_int(2).pow(static_cast<int>(elements));
}

QPolynomial single_color_gf(int n) {
  QPolynomial p = QPolynomial::one();
  for (int t = 0; t <= n - 2; ++t) p *= q_int(n - t).pow(t + 1);
  return p;
}

QPolynomial two_opposite_gf(int n) {
  QPolynomial p = QPolynomial::one();
  for (int j = 1; j <= n - 1; ++j) p *= q_binomial(n, j);
  return p;
}

QPolynomial carlitz_product(int n) {
  QPolynomial p = QPolynomial::one();
  for (int j = 2; j <= n; ++j) p *= carlitz_riordan(j);
  return p;
}

QPolynomial three_nice_gf(int n) {
  QPolynomial p = QPolynomial::one();
  for (int j = 1; j <= n - 1; ++j) {
    QPolynomial factor = QPolynomial::one() + QPolynomial::monomial(Int(1), j);
    p *= factor.pow(n - j);
  }
  return p;
}

QPolynomial q_asm_product(int n) {
  QPolynomial num = QPolynomial::one(), den = QPolynomial::one();
  for (int j = 0; j <= n - 1; ++j) {
    num *= q_factorial(3 * j + 1);
    den *= q_factorial(n + j);
  }
  return num.exact_div(den);
}

std::optional<QPolynomial> q_tspp_product(int n) {
  QPolynomial num = QPolynomial::one(), den = QPolynomial::one();
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j)
      for (int k = j; k <= n - 1; ++k) {
        num *= q_int(i + j + k - 1);
        den *= q_int(i + j + k - 2);
      }
  QPolynomial quot, rem;
  if (!QPolynomial::divide(num, den, quot, rem) || !rem.is_zero()) return std::nullopt;
  return quot;
}

QPolynomial sundquist_A(int n, int p) {
  if (n < 1 || p < 1) throw std::invalid_argument("sundquist_A: n and p must be >= 1");
  QPolynomial num = QPolynomial::one(), den = QPolynomial::one();
  for (int k = 0; k <= n - 1; ++k) {
    num *= q_factorial(n * p + k);
    num *= q_factorial(k);
    den *= q_factorial(k * p + k + p);
    den *= q_factorial(k * p + k);
  }
  return num.exact_div(den);
}

QPolynomial rank_gf_formula(ColorSet s, int n) {
  switch (classify(s)) {
    case TheoremClass::Empty:
      return empty_class_gf(n);
    case TheoremClass::Single:
      return single_color_gf(n);
    case TheoremClass::TwoOpposite:
      return two_opposite_gf(n);
    case TheoremClass::TwoAdjacent: {
      QPolynomial p = carlitz_product(n);
      return two_adjacent_is_dual(s) ? p.reversed() : p;
    }
    case TheoremClass::ThreeNice:
      return three_nice_gf(n);
    default:
      throw NoFormulaError("no known rank generating function formula for class " +
                           theorem_class_name(classify(s)));
  }
}

Int count_formula(ColorSet s, int n) {
  switch (classify(s)) {
    case TheoremClass::Empty:
    case TheoremClass::Single:
    case TheoremClass::TwoOpposite:
    case TheoremClass::TwoAdjacent:
    case TheoremClass::ThreeNice:
      return rank_gf_formula(s, n).eval_at_one();
    case TheoremClass::Four:
      return asm_count(n);
    case TheoremClass::Six:
      return tspp_count(n);
    default:
      throw NoFormulaError("no known product formula for class " +
                           theorem_class_name(classify(s)));
  }
}

}  // namespace tetraposet
