#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tetraposet/bigint.hpp"
#include "tetraposet/poset.hpp"
#include "tetraposet/qpoly.hpp"

namespace tetraposet {

// Fixed-width bitset for element membership, one bit per element in canonical
// order. 128 bits covers every poset in scope (T_9 has 120 elements).
struct Bits128 {
  std::array<std::uint64_t, 2> w{0, 0};

  static constexpr int kCapacity = 128;

  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  int count() const;
  bool none() const { return w[0] == 0 && w[1] == 0; }

  friend bool operator==(const Bits128& a, const Bits128& b) { return a.w == b.w; }
  friend bool operator!=(const Bits128& a, const Bits128& b) { return a.w != b.w; }
  // Lexicographic on the bit string b_0 b_1 ... (bit 0 most significant).
  static bool lex_less(const Bits128& a, const Bits128& b);

  std::string to_hex() const;  // value of sum 2^i over set bits, lowercase, no 0x
  static Bits128 from_hex(const std::string& hex, int nbits);
};

struct OrderIdeal {
  Bits128 bits;
  int size = 0;  // cached popcount

  friend bool operator==(const OrderIdeal& a, const OrderIdeal& b) { return a.bits == b.bits; }
};

OrderIdeal make_ideal(const Bits128& bits);

// True when every edge (t,h) with h in the set also has t in the set, i.e.
// the set is down-closed for the reachability order.
bool is_ideal(const ColoredPoset& p, const Bits128& bits);

// Exact number of order ideals by backtracking with forced-in/forced-out
// propagation. Cost grows with the count itself; fine up to a few million.
Int count_ideals(const ColoredPoset& p);

// Stream every ideal exactly once, in lexicographic order of membership bit
// vectors. Intended for small posets (the caller controls scale).
void enumerate_ideals(const ColoredPoset& p, const std::function<void(const OrderIdeal&)>& emit);
std::vector<OrderIdeal> enumerate_ideals(const ColoredPoset& p);

// Rank generating function F(J(p), q) = sum over ideals of q^|ideal|.
QPolynomial rank_gf(const ColoredPoset& p);

// Exact count by connected-component factorization plus a slice-by-slice
// frontier DP (states = ideals of one slice). Handles posets whose ideal
// count is astronomically large, e.g. edge-free restrictions.
Int count_ideals_fast(const ColoredPoset& p);

}  // namespace tetraposet
