#include "tetraposet/expansions.hpp"

#include <vector>

#include "tetraposet/array.hpp"
#include "tetraposet/objects.hpp"
#include "tetraposet/stats.hpp"

namespace tetraposet {

namespace {

MultiPolynomial mp_pow(const MultiPolynomial& base, long long k) {
  MultiPolynomial out = MultiPolynomial::constant(base.nvars(), 1);
  for (long long i = 0; i < k; ++i) out *= base;
  return out;
}

MultiPolynomial lambda_pow(int nvars, long long e) {
  std::vector<int> exps(nvars + 1, 0);
  exps[0] = (int)e;
  return MultiPolynomial::monomial(nvars, exps, 1);
}

}  // namespace

MultiPolynomial tournament_gf(int n) {
  MultiPolynomial out = MultiPolynomial::constant(n, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> fav(n + 1, 0), ups(n + 1, 0);
      fav[i] = 1;
      ups[0] = 1;
      ups[j] = 1;
      out *= MultiPolynomial::monomial(n, fav, 1) + MultiPolynomial::monomial(n, ups, 1);
    }
  return out;
}

MultiPolynomial tournament_expansion(int n) {
  MultiPolynomial out(n);
  for (const Tournament& t : enumerate_tournaments(n)) {
    std::vector<int> exps(n + 1, 0);
    exps[0] = (int)t.upsets.size();
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) exps[t.upset(i, j) ? j : i] += 1;
    out += MultiPolynomial::monomial(n, exps, 1);
  }
  return out;
}

MultiPolynomial asm_expansion(int n) {
  const MultiPolynomial one_plus_lambda =
      MultiPolynomial::constant(n, 1) + lambda_pow(n, 1);
  MultiPolynomial out(n);
  for (const StaircaseArray& a : enumerate_yplus(ColorSet::from_string("bgoy"), n)) {
    const ArrayStats s = compute_stats(a);
    std::vector<int> exps(n + 1, 0);
    exps[0] = (int)s.e_total;
    for (int k = 1; k <= n; ++k) exps[k] = (int)s.c_val[k] - 1;
    out += MultiPolynomial::monomial(n, exps, 1) * mp_pow(one_plus_lambda, s.n_total);
  }
  return out;
}

MultiPolynomial tsscpp_expansion(int n) {
  MultiPolynomial out(n);
  for (const StaircaseArray& a : enumerate_yplus(ColorSet::from_string("rbgy"), n)) {
    const ArrayStats s = compute_stats(a);
    std::vector<int> exps(n + 1, 0);
    exps[0] = (int)s.e_total;
    for (int i = 1; i <= n; ++i) exps[i] = n - i - (int)s.e_row[i - 1];
    MultiPolynomial inner(n);
    for (const StaircaseArray& shuffled : row_shuffles(a)) {
      const ArrayStats ss = compute_stats(shuffled);
      std::vector<int> diag_exps(n + 1, 0);
      for (int d = 2; d <= n; ++d) diag_exps[d] = (int)ss.e_diag[d];
      inner += MultiPolynomial::monomial(n, diag_exps, 1);
    }
    out += MultiPolynomial::monomial(n, exps, 1) * inner;
  }
  return out;
}

QPolynomial tsscpp_binomial_sum(int n) {
  std::vector<Int> coeffs(n * (n - 1) / 2 + 1, 0);
  for (const StaircaseArray& a : enumerate_yplus(ColorSet::from_string("rbgy"), n)) {
    const ArrayStats s = compute_stats(a);
    coeffs[s.e_total] += shuffle_fiber_size(s);
  }
  return QPolynomial::from_coeffs(coeffs);
}

Int sum_two_pow_strict(int n) {
  Int total = 0;
  for (const StaircaseArray& a : enumerate_yplus(ColorSet::from_string("bgoy"), n)) {
    Int term = 1;
    term <<= compute_stats(a).n_total;
    total += term;
  }
  return total;
}

Int sum_shuffle_fibers(int n) {
  Int total = 0;
  for (const StaircaseArray& a : enumerate_yplus(ColorSet::from_string("rbgy"), n))
    total += shuffle_fiber_size(compute_stats(a));
  return total;
}

}  // namespace tetraposet
