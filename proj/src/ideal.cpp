#include "tetraposet/ideal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tetraposet {

int Bits128::count() const {
  return std::popcount(w[0]) + std::popcount(w[1]);
}

bool Bits128::lex_less(const Bits128& a, const Bits128& b) {
  // Bit i is more significant the smaller i is; within a word the low bit
  // comes first, so compare bit-reversed words.
  for (int k = 0; k < 2; ++k) {
    if (a.w[k] == b.w[k]) continue;
    std::uint64_t diff = a.w[k] ^ b.w[k];
    std::uint64_t first = diff & ~(diff - 1);  // lowest differing bit = earliest position
    return (a.w[k] & first) == 0;
  }
  return false;
}

std::string Bits128::to_hex() const {
  // Hex digits of sum 2^i, most significant first, no leading zeros.
  static const char* digits = "0123456789abcdef";
  std::string out;
  bool started = false;
  for (int nibble = 31; nibble >= 0; --nibble) {
    int word = nibble >> 4;
    int shift = (nibble & 15) * 4;
    int v = static_cast<int>((w[word] >> shift) & 0xf);
    if (v != 0 || started) {
      out.push_back(digits[v]);
      started = true;
    }
  }
  if (!started) out = "0";
  return out;
}

Bits128 Bits128::from_hex(const std::string& hex, int nbits) {
  if (hex.empty() || hex.size() > 32) throw std::invalid_argument("bad ideal hex string");
  Bits128 b;
  for (char ch : hex) {
    int v;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
    else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
    else throw std::invalid_argument("bad ideal hex string");
    // shift left by 4
    b.w[1] = (b.w[1] << 4) | (b.w[0] >> 60);
    b.w[0] = (b.w[0] << 4) | static_cast<std::uint64_t>(v);
  }
  for (int i = nbits; i < kCapacity; ++i)
    if (b.test(i)) throw std::invalid_argument("ideal hex has bits beyond poset size");
  return b;
}

OrderIdeal make_ideal(const Bits128& bits) { return OrderIdeal{bits, bits.count()}; }

bool is_ideal(const ColoredPoset& p, const Bits128& bits) {
  for (const auto& ec : p.edges)
    for (const Edge& e : ec)
      if (bits.test(e.head) && !bits.test(e.tail)) return false;
  return true;
}

namespace {

// Backtracking enumerator. Elements are decided in canonical index order;
// deciding one propagates: membership forces all predecessors in, exclusion
// forces all successors out. The exclude branch is explored first, which
// makes emission order lexicographic on bit vectors.
class ForceDfs {
 public:
  explicit ForceDfs(const ColoredPoset& p) : p_(p), state_(p.size(), 0) {
    if (p.size() > Bits128::kCapacity)
      throw std::invalid_argument("poset too large for the 128-bit ideal engine");
  }

  void run(const std::function<void(const std::vector<signed char>&, int)>& leaf) {
    leaf_ = &leaf;
    included_ = 0;
    descend(0);
  }

 private:
  void descend(int idx) {
    while (idx < p_.size() && state_[idx] != 0) ++idx;
    if (idx == p_.size()) {
      (*leaf_)(state_, included_);
      return;
    }
    size_t mark = trail_.size();
    if (try_set(idx, -1)) descend(idx + 1);
    undo(mark);
    if (try_set(idx, +1)) descend(idx + 1);
    undo(mark);
  }

  bool try_set(int root, signed char value) {
    work_.clear();
    work_.push_back({root, value});
    while (!work_.empty()) {
      auto [x, v] = work_.back();
      work_.pop_back();
      if (state_[x] == v) continue;
      if (state_[x] == -v) return false;
      state_[x] = v;
      trail_.push_back(x);
      if (v > 0) {
        ++included_;
        for (int t : p_.preds[x]) work_.push_back({t, +1});
      } else {
        for (int h : p_.succs[x]) work_.push_back({h, -1});
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail_.size() > mark) {
      int x = trail_.back();
      trail_.pop_back();
      if (state_[x] > 0) --included_;
      state_[x] = 0;
    }
  }

  const ColoredPoset& p_;
  std::vector<signed char> state_;
  std::vector<int> trail_;
  std::vector<std::pair<int, signed char>> work_;
  const std::function<void(const std::vector<signed char>&, int)>* leaf_ = nullptr;
  int included_ = 0;
};

}  // namespace

Int count_ideals(const ColoredPoset& p) {
  Int count = 0;
  ForceDfs dfs(p);
  dfs.run([&](const std::vector<signed char>&, int) { ++count; });
  return count;
}

void enumerate_ideals(const ColoredPoset& p,
                      const std::function<void(const OrderIdeal&)>& emit) {
  ForceDfs dfs(p);
  dfs.run([&](const std::vector<signed char>& state, int included) {
    OrderIdeal ideal;
    for (int i = 0; i < p.size(); ++i)
      if (state[i] > 0) ideal.bits.set(i);
    ideal.size = included;
    emit(ideal);
  });
}

std::vector<OrderIdeal> enumerate_ideals(const ColoredPoset& p) {
  std::vector<OrderIdeal> out;
  enumerate_ideals(p, [&](const OrderIdeal& i) { out.push_back(i); });
  return out;
}

QPolynomial rank_gf(const ColoredPoset& p) {
  std::vector<Int> coeffs(p.size() + 1, Int(0));
  ForceDfs dfs(p);
  dfs.run([&](const std::vector<signed char>&, int included) { ++coeffs[included]; });
  return QPolynomial::from_coeffs(std::move(coeffs));
}

}  // namespace tetraposet
