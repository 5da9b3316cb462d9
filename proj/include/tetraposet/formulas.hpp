#pragma once

#include <optional>
#include <stdexcept>

#include "tetraposet/bigint.hpp"
#include "tetraposet/color.hpp"
#include "tetraposet/qpoly.hpp"

namespace tetraposet {

// q-integers, q-factorials, Gaussian binomials; all exact.
QPolynomial q_int(int m);                  // [m]_q = 1 + q + ... + q^{m-1}
QPolynomial q_factorial(int m);            // [m]!_q
QPolynomial q_binomial(int m, int k);      // via the q-Pascal recurrence

// Carlitz-Riordan q-Catalan: C_0 = 1,
// C_m(q) = sum_{k=1..m} q^{k-1} C_{k-1}(q) C_{m-k}(q); grades Dyck paths by area.
QPolynomial carlitz_riordan(int m);

// MacMahon q-Catalan (1/[p+1]_q) [2p choose p]_q; grades Dyck paths by major index.
QPolynomial macmahon_q_catalan(int p);

Int factorial(int m);
Int binomial(int m, int k);
Int catalan(int m);

// Closed-form counts.
Int asm_count(int n);            // prod_{j=0}^{n-1} (3j+1)!/(n+j)!  : 1,2,7,42,429,7436
Int tspp_count(int n);           // prod_{1<=i<=j<=k<=n-1} (i+j+k-1)/(i+j+k-2) : 1,2,5,16,66,352
Int catalan_product_count(int n);  // prod_{j=2}^{n} C_j

// Rank generating function formulas per theorem class.
QPolynomial empty_class_gf(int n);      // (1+q)^{C(n+1,3)}
QPolynomial single_color_gf(int n);     // prod_{t=0}^{n-2} [n-t]_q^{t+1}
QPolynomial two_opposite_gf(int n);     // prod_{j=1}^{n-1} [n choose j]_q
QPolynomial carlitz_product(int n);     // prod_{j=2}^{n} C_j(q)   (two-adjacent, direct)
QPolynomial three_nice_gf(int n);       // prod_{j=1}^{n-1} (1+q^j)^{n-j}

// q-ASM product prod_{j=0}^{n-1} (3j+1)!_q / (n+j)!_q (exact division).
QPolynomial q_asm_product(int n);

// q-TSPP product prod_{1<=i<=j<=k<=n-1} [i+j+k-1]_q/[i+j+k-2]_q; nullopt if
// the division is not exact (it is a polynomial, but this keeps the check honest).
std::optional<QPolynomial> q_tspp_product(int n);

// A(n,p;q) = prod_{k=0}^{n-1} (np+k)!_q k!_q / ((kp+k+p)!_q (kp+k)!_q).
// Specializes to the q-ASM product at p = 2 and to the MacMahon q-Catalan at n = 2.
QPolynomial sundquist_A(int n, int p);

struct NoFormulaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rank GF for the classes that have one (empty, single, two-opposite,
// two-adjacent, three-nice; dual two-adjacent sets get the reversed
// coefficients). Throws NoFormulaError for the other classes.
QPolynomial rank_gf_formula(ColorSet s, int n);

// Ideal counts for every class with a product formula (adds four = ASM count
// and six = TSPP count to the ones above). Throws NoFormulaError for
// three-exceptional and the five-color classes.
Int count_formula(ColorSet s, int n);

}  // namespace tetraposet
