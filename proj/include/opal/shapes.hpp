#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace opal {

/// A complete binary parenthesization with k ≥ 1 leaves (an element of V(k)).
///
/// Stored as a prefix code: 1 opens a node whose two subtrees follow, 0 is a
/// leaf.  Equal trees have equal codes, so comparison and hashing are on the
/// code.  There is no zero-leaf tree; V(0) is the empty enumeration.
class Paren {
public:
  Paren() : code_{0} {}  // the single leaf, 1 ∈ V(1)

  static Paren leaf() { return {}; }
  static Paren node(const Paren& left, const Paren& right);
  /// ((…(leaf,leaf),…),leaf) with k leaves.
  static Paren left_comb(std::size_t k);
  /// (leaf,(leaf,(…,leaf))) with k leaves.
  static Paren right_comb(std::size_t k);

  bool is_leaf() const noexcept { return code_.size() == 1; }
  Paren left() const;
  Paren right() const;
  std::size_t leaf_count() const noexcept;
  const std::vector<std::uint8_t>& code() const noexcept { return code_; }

  friend bool operator==(const Paren&, const Paren&) = default;
  friend auto operator<=>(const Paren&, const Paren&) = default;

private:
  explicit Paren(std::vector<std::uint8_t> code) : code_(std::move(code)) {}
  std::size_t left_end() const;  // index one past the left subtree's code

  std::vector<std::uint8_t> code_;
};

/// All elements of V(k), built by the recursion V(k) = ∐_{i+j=k} V(i)×V(j).
/// k = 0 yields the empty sequence.
std::vector<Paren> enumerate_parens(std::size_t k);

/// A subset of {1,…,ambient}, kept strictly increasing.
class SlotSet {
public:
  SlotSet() = default;
  SlotSet(std::vector<int> elements, std::size_t ambient);

  const std::vector<int>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t ambient() const noexcept { return ambient_; }
  bool contains(int i) const;

  /// 𝒫_n(k): every n-element subset of {1,…,k}, lexicographic.
  static std::vector<SlotSet> all(std::size_t n, std::size_t k);

  friend bool operator==(const SlotSet&, const SlotSet&) = default;
  friend auto operator<=>(const SlotSet&, const SlotSet&) = default;

private:
  std::vector<int> elements_;
  std::size_t ambient_ = 0;
};

/// An element (tree, marks) of Z(n) = ∐_{k≥n} V(k)×𝒫_n(k): a parenthesization
/// with k leaves of which n are marked as variable slots.
class ZObject {
public:
  ZObject() : marks_({}, 1) {}  // (1, ∅)
  ZObject(Paren tree, std::vector<int> marks);

  const Paren& tree() const noexcept { return tree_; }
  const SlotSet& marks() const noexcept { return marks_; }
  std::size_t arity() const noexcept { return marks_.size(); }
  std::size_t width() const noexcept { return marks_.ambient(); }

  /// Every ZObject of the given width (all trees × all mark subsets).
  static std::vector<ZObject> all_of_width(std::size_t width);
  static std::vector<ZObject> all_of_width(std::size_t width, std::size_t arity);

  friend bool operator==(const ZObject&, const ZObject&) = default;
  friend auto operator<=>(const ZObject&, const ZObject&) = default;

private:
  Paren tree_;
  SlotSet marks_;
};

/// (a,R)⊕(b,S) = ((a,b), R ⨿ k+S) where k = width of the left operand.
ZObject tensor_z(const ZObject& z1, const ZObject& z2);

/// Non-symmetric operadic substitution: the i-th marked leaf of b (in
/// increasing leaf order) is replaced by parts[i-1].  Unmarked leaves of b stay
/// unmarked; the result's marks are the parts' marks at their new positions.
ZObject gamma_z(const ZObject& b, std::span<const ZObject> parts);

std::string to_string(const Paren& p);
std::string to_string(const ZObject& z);

}  // namespace opal

template <>
struct std::hash<opal::Paren> {
  std::size_t operator()(const opal::Paren& p) const noexcept {
    std::size_t h = 7;
    for (auto c : p.code()) h = h * 3 + c;
    return h;
  }
};

template <>
struct std::hash<opal::ZObject> {
  std::size_t operator()(const opal::ZObject& z) const noexcept {
    std::size_t h = std::hash<opal::Paren>{}(z.tree());
    for (int m : z.marks().elements()) h = h * 131 + static_cast<std::size_t>(m);
    return h;
  }
};
