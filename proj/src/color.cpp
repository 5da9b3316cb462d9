#include "tetraposet/color.hpp"

#include <bit>
#include <stdexcept>

namespace tetraposet {

namespace {

constexpr char kLetters[kNumColors] = {'r', 'b', 'g', 'o', 'y', 's'};

constexpr std::array<std::array<int, 3>, kNumColors> kMoves = {{
    {1, 0, 0},    // red
    {-1, 1, 0},   // blue
    {0, 1, 0},    // green
    {-1, 0, 1},   // orange
    {0, 0, 1},    // yellow
    {0, 1, -1},   // silver
}};

std::uint8_t bit(Color c) { return std::uint8_t(1u << static_cast<int>(c)); }

struct Rule {
  std::uint8_t pair;
  std::uint8_t forced;
};

// {r,b}->g, {o,s}->b, {s,y}->g, {r,o}->y
const Rule kRules[4] = {
    {std::uint8_t(bit(Color::Red) | bit(Color::Blue)), bit(Color::Green)},
    {std::uint8_t(bit(Color::Orange) | bit(Color::Silver)), bit(Color::Blue)},
    {std::uint8_t(bit(Color::Silver) | bit(Color::Yellow)), bit(Color::Green)},
    {std::uint8_t(bit(Color::Red) | bit(Color::Orange)), bit(Color::Yellow)},
};

}  // namespace

char color_char(Color c) { return kLetters[static_cast<int>(c)]; }

Color color_from_char(char ch) {
  for (int i = 0; i < kNumColors; ++i)
    if (kLetters[i] == ch) return static_cast<Color>(i);
  throw std::invalid_argument(std::string("unknown color letter '") + ch + "'");
}

const std::array<int, 3>& color_move(Color c) { return kMoves[static_cast<int>(c)]; }

ColorSet ColorSet::all() { return from_mask(0x3f); }

ColorSet ColorSet::from_mask(std::uint8_t m) {
  if (m & ~0x3fu) throw std::invalid_argument("color mask out of range");
  ColorSet s;
  s.mask_ = m;
  return s;
}

ColorSet ColorSet::from_string(const std::string& letters) {
  ColorSet s;
  for (char ch : letters) s.insert(color_from_char(ch));
  return s;
}

int ColorSet::size() const { return std::popcount(static_cast<unsigned>(mask_)); }

std::string ColorSet::to_string() const {
  std::string out;
  for (int i = 0; i < kNumColors; ++i)
    if ((mask_ >> i) & 1u) out.push_back(kLetters[i]);
  return out;
}

std::vector<Color> ColorSet::colors() const {
  std::vector<Color> out;
  for (int i = 0; i < kNumColors; ++i)
    if ((mask_ >> i) & 1u) out.push_back(static_cast<Color>(i));
  return out;
}

bool is_admissible(ColorSet s) {
  for (const Rule& r : kRules)
    if ((s.mask() & r.pair) == r.pair && (s.mask() & r.forced) == 0) return false;
  return true;
}

ColorSet admissible_closure(ColorSet s) {
  std::uint8_t m = s.mask();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : kRules) {
      if ((m & r.pair) == r.pair && (m & r.forced) == 0) {
        m |= r.forced;
        changed = true;
      }
    }
  }
  return ColorSet::from_mask(m);
}

std::vector<ColorSet> all_admissible() {
  std::vector<ColorSet> out;
  for (int m = 0; m < 64; ++m) {
    ColorSet s = ColorSet::from_mask(std::uint8_t(m));
    if (is_admissible(s)) out.push_back(s);
  }
  return out;
}

Color dual_color(Color c) {
  switch (c) {
    case Color::Red: return Color::Silver;
    case Color::Silver: return Color::Red;
    case Color::Blue: return Color::Yellow;
    case Color::Yellow: return Color::Blue;
    default: return c;  // green, orange fixed
  }
}

ColorSet dual_colors(ColorSet s) {
  ColorSet out;
  for (Color c : s.colors()) out.insert(dual_color(c));
  return out;
}

namespace {

std::uint8_t mask_of(std::initializer_list<Color> cs) {
  std::uint8_t m = 0;
  for (Color c : cs) m |= bit(c);
  return m;
}

bool member(ColorSet s, std::initializer_list<std::uint8_t> masks) {
  for (std::uint8_t m : masks)
    if (s.mask() == m) return true;
  return false;
}

using C = Color;

const std::uint8_t kGO = mask_of({C::Green, C::Orange});
const std::uint8_t kRS = mask_of({C::Red, C::Silver});
const std::uint8_t kBY = mask_of({C::Blue, C::Yellow});

const std::uint8_t kDirectAdjacent[4] = {
    mask_of({C::Blue, C::Green}), mask_of({C::Blue, C::Silver}),
    mask_of({C::Yellow, C::Orange}), mask_of({C::Green, C::Silver})};
const std::uint8_t kDualAdjacent[4] = {
    mask_of({C::Yellow, C::Green}), mask_of({C::Red, C::Yellow}),
    mask_of({C::Blue, C::Orange}), mask_of({C::Red, C::Green})};

const std::uint8_t kExceptional[2] = {mask_of({C::Red, C::Green, C::Yellow}),
                                      mask_of({C::Blue, C::Green, C::Silver})};

const std::uint8_t kFiveA[2] = {
    mask_of({C::Blue, C::Green, C::Orange, C::Yellow, C::Silver}),
    mask_of({C::Red, C::Blue, C::Green, C::Orange, C::Yellow})};
const std::uint8_t kFiveB = mask_of({C::Red, C::Blue, C::Green, C::Yellow, C::Silver});

}  // namespace

bool two_adjacent_is_dual(ColorSet s) {
  return member(s, {kDualAdjacent[0], kDualAdjacent[1], kDualAdjacent[2], kDualAdjacent[3]});
}

TheoremClass classify(ColorSet s) {
  if (!is_admissible(s))
    throw std::invalid_argument("classify: color set {" + s.to_string() +
                                "} is not admissible; take admissible_closure first");
  switch (s.size()) {
    case 0:
      return TheoremClass::Empty;
    case 1:
      return TheoremClass::Single;
    case 2:
      if (member(s, {kGO, kRS, kBY})) return TheoremClass::TwoOpposite;
      return TheoremClass::TwoAdjacent;
    case 3:
      if (member(s, {kExceptional[0], kExceptional[1]})) return TheoremClass::ThreeExceptional;
      return TheoremClass::ThreeNice;
    case 4:
      return TheoremClass::Four;
    case 5:
      if (s.mask() == kFiveB) return TheoremClass::FiveB;
      return TheoremClass::FiveA;
    default:
      return TheoremClass::Six;
  }
}

std::string theorem_class_name(TheoremClass t) {
  switch (t) {
    case TheoremClass::Empty: return "empty";
    case TheoremClass::Single: return "single";
    case TheoremClass::TwoOpposite: return "two-opposite";
    case TheoremClass::TwoAdjacent: return "two-adjacent";
    case TheoremClass::ThreeNice: return "three-nice";
    case TheoremClass::ThreeExceptional: return "three-exceptional";
    case TheoremClass::Four: return "four";
    case TheoremClass::FiveA: return "five-a";
    case TheoremClass::FiveB: return "five-b";
    case TheoremClass::Six: return "six";
  }
  return "?";
}

}  // namespace tetraposet
