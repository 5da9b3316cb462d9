#pragma once

#include "tetraposet/array.hpp"
#include "tetraposet/objects.hpp"

namespace tetraposet {

// ASM <-> monotone triangle: row i of the triangle lists, in increasing
// order, the columns whose partial sum through matrix row i equals 1.
MonotoneTriangle asm_to_monotone(const Asm& m);
Asm monotone_to_asm(const MonotoneTriangle& m);

// Monotone triangle <-> Yplus({b,y,o,g}): the rotation y_{i,j} = a_{n-j,i}.
// Column 0 becomes the identity bottom row; composing with asm_to_monotone
// realizes the ASM <-> array bijection.
StaircaseArray monotone_to_yplus(const MonotoneTriangle& m);
MonotoneTriangle yplus_to_monotone(const StaircaseArray& a);

StaircaseArray asm_to_yplus(const Asm& m);
Asm yplus_to_asm(const StaircaseArray& a);

// TSSCPP <-> Yplus({r,g,o,y}). Forward reads the fundamental domain
// {t_{a,b} : n+1 <= a <= b <= 2n} through the cell map x_{i,j} =
// t_{2n+1-i-j, 2n-j} (reflect, rotate, add i to row i). The inverse
// reconstructs the full height matrix: upper-right triangle of the bottom
// quadrant from the array, transpose within that quadrant, top quadrant by
// self-complementation, mixed quadrants by row self-conjugacy
//   t_{a,b} = #{r <= n : t_{a,r} >= b} + #{r > n : t_{b,r} >= a},
// then checks every defining predicate.
StaircaseArray tsscpp_to_yplus(const PlanePartition& pp, int n);
PlanePartition yplus_to_tsscpp(const StaircaseArray& a);

// TSPP in an (n-1)^3 box <-> order ideal of T_n (all six colors). The wedge
// 1 <= z <= y <= x <= n-1 is a fundamental domain for the S_3 action; its
// cube (x,y,z) corresponds to the element (c1,c2,c3) = (x-y, z-1, y-z).
OrderIdeal tspp_to_ideal(const PlanePartition& pp, int n);
PlanePartition ideal_to_tspp(const OrderIdeal& ideal, int n);

// Dyck path of 2n steps <-> order ideal of P_n({b,g}). The poset element
// (c1,c2) sits under the unit rhombus centered at horizontal position
// i = 2n-2-2*c1-c2 and height h = c2+1; it lies strictly below the path
// exactly when h_{i-1} >= h, h_i >= h+1 and h_{i+1} >= h. Weight is
// preserved: |ideal| = number of rhombi below the path.
OrderIdeal dyck_to_ideal(const DyckPath& d, int n);
DyckPath ideal_to_dyck(const OrderIdeal& ideal, int n);

// Tournament <-> Yplus({b,r,(g)}): y_{i,j} = i + number of upsets player i+j
// inflicted on players i..i+j-1. Entry equal to its southwest neighbor means
// the game between i and i+j was an upset; one smaller means it was not.
StaircaseArray tournament_to_yplus(const Tournament& t);
Tournament yplus_to_tournament(const StaircaseArray& a);

// Sundquist's map from SSYT of staircase shape to tournament tableaux.
// Iteration i = 1..n-1 first removes every entry i by jeu de taquin (the i's
// form a prefix of the top row; each hole slides southeast out of the
// tableau, the smaller of east/south moving in, south on ties), then deletes
// the anti-diagonal cells r + c = n-i+1 bottom row first by reverse column
// insertion: the deleted value moves leftward column by column, swapping
// with the bottommost entry <= it, and the value expelled from column 1 is
// recorded. Row i of the output collects the removed i's and the expelled
// values, sorted.
TournamentTableau sundquist(const StaircaseArray& ssyt);

// The tournament a tableau encodes: entry v > i in row i is the upset (i,v).
Tournament tableau_to_tournament(const TournamentTableau& t);

}  // namespace tetraposet
