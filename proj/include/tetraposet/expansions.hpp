#pragma once

#include "tetraposet/bigint.hpp"
#include "tetraposet/multipoly.hpp"
#include "tetraposet/qpoly.hpp"

namespace tetraposet {

// The tournament generating function prod_{1<=i<j<=n} (x_i + L x_j): picking
// x_i scores a win for the favorite, picking L x_j an upset win for j.
MultiPolynomial tournament_gf(int n);

// The same polynomial summed game by game over all 2^C(n,2) tournaments:
// L^{#upsets} prod_k x_k^{#wins of k}. Oracle for the product form.
MultiPolynomial tournament_expansion(int n);

// Expansion over Yplus({b,g,o,y}) arrays, i.e. over alternating sign
// matrices: sum of L^E (1+L)^N prod_k x_k^{C_k - 1}.
MultiPolynomial asm_expansion(int n);

// Expansion over Yplus({r,b,g,y}) arrays, i.e. over TSSCPPs: sum of
// L^E prod_i x_i^{n-i-E_i} sum over row shuffles of prod_{d=2..n} x_d^{E^d}.
MultiPolynomial tsscpp_expansion(int n);

// Specialization x_k = 1: sum over Yplus({r,b,g,y}) arrays of L^E times the
// shuffle fiber size prod binomial(C_{i+1,k}, E_{i,k}); equals (1+L)^C(n,2).
QPolynomial tsscpp_binomial_sum(int n);

// Corollary sums, both equal to 2^C(n,2): over {b,g,o,y} arrays sum of 2^N,
// and over {r,b,g,y} arrays sum of the shuffle fiber sizes.
Int sum_two_pow_strict(int n);
Int sum_shuffle_fibers(int n);

}  // namespace tetraposet
