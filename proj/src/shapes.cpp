#include "opal/shapes.hpp"

#include <algorithm>

#include "opal/error.hpp"

namespace opal {

Paren Paren::node(const Paren& left, const Paren& right) {
  std::vector<std::uint8_t> code;
  code.reserve(1 + left.code_.size() + right.code_.size());
  code.push_back(1);
  code.insert(code.end(), left.code_.begin(), left.code_.end());
  code.insert(code.end(), right.code_.begin(), right.code_.end());
  return Paren(std::move(code));
}

Paren Paren::left_comb(std::size_t k) {
  if (k == 0) throw StructuralError("left_comb: V(0) is empty");
  Paren p;
  for (std::size_t i = 1; i < k; ++i) p = node(p, leaf());
  return p;
}

Paren Paren::right_comb(std::size_t k) {
  if (k == 0) throw StructuralError("right_comb: V(0) is empty");
  Paren p;
  for (std::size_t i = 1; i < k; ++i) p = node(leaf(), p);
  return p;
}

std::size_t Paren::left_end() const {
  // Scan a complete subtree starting at index 1.
  long pending = 1;
  std::size_t i = 1;
  while (pending > 0) {
    pending += code_[i] == 1 ? 1 : -1;
    ++i;
  }
  return i;
}

Paren Paren::left() const {
  if (is_leaf()) throw StructuralError("Paren::left on a leaf");
  return Paren(std::vector<std::uint8_t>(code_.begin() + 1, code_.begin() + static_cast<long>(left_end())));
}

Paren Paren::right() const {
  if (is_leaf()) throw StructuralError("Paren::right on a leaf");
  return Paren(std::vector<std::uint8_t>(code_.begin() + static_cast<long>(left_end()), code_.end()));
}

std::size_t Paren::leaf_count() const noexcept {
  return static_cast<std::size_t>(std::count(code_.begin(), code_.end(), std::uint8_t{0}));
}

std::vector<Paren> enumerate_parens(std::size_t k) {
  std::vector<std::vector<Paren>> table(k + 1);
  if (k == 0) return {};
  table[1] = {Paren::leaf()};
  for (std::size_t n = 2; n <= k; ++n)
    for (std::size_t i = 1; i < n; ++i)
      for (const auto& l : table[i])
        for (const auto& r : table[n - i]) table[n].push_back(Paren::node(l, r));
  return table[k];
}

SlotSet::SlotSet(std::vector<int> elements, std::size_t ambient)
    : elements_(std::move(elements)), ambient_(ambient) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || static_cast<std::size_t>(elements_[i]) > ambient_)
      throw StructuralError("SlotSet: element " + std::to_string(elements_[i]) + " outside {1.." +
                            std::to_string(ambient_) + "}");
    if (i > 0 && elements_[i] <= elements_[i - 1])
      throw StructuralError("SlotSet: elements must be strictly increasing");
  }
}

bool SlotSet::contains(int i) const { return std::binary_search(elements_.begin(), elements_.end(), i); }

std::vector<SlotSet> SlotSet::all(std::size_t n, std::size_t k) {
  std::vector<SlotSet> out;
  if (n > k) return out;
  std::vector<int> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = static_cast<int>(i + 1);
  while (true) {
    out.emplace_back(pick, k);
    // Advance to the next combination.
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == static_cast<int>(k - n + i)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

ZObject::ZObject(Paren tree, std::vector<int> marks)
    : tree_(std::move(tree)), marks_(std::move(marks), tree_.leaf_count()) {}

std::vector<ZObject> ZObject::all_of_width(std::size_t width) {
  std::vector<ZObject> out;
  for (std::size_t n = 0; n <= width; ++n) {
    auto part = all_of_width(width, n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<ZObject> ZObject::all_of_width(std::size_t width, std::size_t arity) {
  std::vector<ZObject> out;
  for (const auto& tree : enumerate_parens(width))
    for (const auto& marks : SlotSet::all(arity, width)) out.emplace_back(tree, marks.elements());
  return out;
}

ZObject tensor_z(const ZObject& z1, const ZObject& z2) {
  auto marks = z1.marks().elements();
  const int shift = static_cast<int>(z1.width());
  for (int m : z2.marks().elements()) marks.push_back(m + shift);
  return ZObject(Paren::node(z1.tree(), z2.tree()), std::move(marks));
}

namespace {

struct Grafter {
  std::span<const ZObject> parts;
  const SlotSet& marks;
  int leaf = 0;         // leaves of b visited so far
  std::size_t slot = 0;  // marked leaves of b consumed so far
  int width = 0;        // leaves of the result emitted so far
  std::vector<int> result_marks = {};

  Paren walk(const Paren& p) {
    if (!p.is_leaf()) {
      auto l = walk(p.left());
      auto r = walk(p.right());
      return Paren::node(l, r);
    }
    ++leaf;
    if (!marks.contains(leaf)) {
      ++width;
      return p;
    }
    const auto& part = parts[slot++];
    for (int m : part.marks().elements()) result_marks.push_back(width + m);
    width += static_cast<int>(part.width());
    return part.tree();
  }
};

}  // namespace

ZObject gamma_z(const ZObject& b, std::span<const ZObject> parts) {
  if (parts.size() != b.arity())
    throw StructuralError("gamma_z: " + std::to_string(parts.size()) + " parts for arity " +
                          std::to_string(b.arity()));
  Grafter g{.parts = parts, .marks = b.marks()};
  auto tree = g.walk(b.tree());
  return ZObject(std::move(tree), std::move(g.result_marks));
}

std::string to_string(const Paren& p) {
  if (p.is_leaf()) return "*";
  return "(" + to_string(p.left()) + "," + to_string(p.right()) + ")";
}

std::string to_string(const ZObject& z) {
  std::string out = to_string(z.tree()) + "{";
  for (std::size_t i = 0; i < z.marks().elements().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(z.marks().elements()[i]);
  }
  return out + "}";
}

}  // namespace opal
