#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "opal/error.hpp"

namespace opal {

/// An element of the symmetric group Σ_n, stored as its 1-based image
/// sequence: images()[i-1] == σ(i).
///
/// Composition is ordinary function composition, (s∘t)(i) = s(t(i)).  The
/// action on tuples is act_inverse(), the σ⁻¹x convention
/// (x_{σ(1)},…,x_{σ(n)}); every other action in the library is phrased in
/// terms of it.
class Permutation {
public:
  Permutation() = default;  // the unique element of Σ_0
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}

  static Permutation identity(std::size_t n);
  /// The transposition of i and j (1-based) in Σ_n.
  static Permutation transposition(std::size_t n, int i, int j);

  std::size_t degree() const noexcept { return images_.size(); }
  const std::vector<int>& images() const noexcept { return images_; }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  bool is_identity() const noexcept;

  /// Every element of Σ_n in lexicographic order of image sequences.
  static std::vector<Permutation> all(std::size_t n);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

Permutation compose(const Permutation& s, const Permutation& t);
Permutation inverse(const Permutation& s);

/// (x_{s(1)},…,x_{s(n)}).  A right action: act_inverse(s∘t, xs) ==
/// act_inverse(t, act_inverse(s, xs)).
template <class T>
std::vector<T> act_inverse(const Permutation& s, std::span<const T> xs) {
  if (xs.size() != s.degree())
    throw StructuralError("act_inverse: tuple length " + std::to_string(xs.size()) +
                          " does not match degree " + std::to_string(s.degree()));
  std::vector<T> out;
  out.reserve(xs.size());
  for (int img : s.images()) out.push_back(xs[static_cast<std::size_t>(img - 1)]);
  return out;
}

template <class T>
std::vector<T> act_inverse(const Permutation& s, const std::vector<T>& xs) {
  return act_inverse(s, std::span<const T>(xs));
}

/// Direct sum: each part permutes its own contiguous block.
Permutation block_sum(std::span<const Permutation> parts);
inline Permutation block_sum(std::initializer_list<Permutation> parts) {
  return block_sum(std::span<const Permutation>(parts.begin(), parts.size()));
}

/// σ⟨j_1,…,j_n⟩: the permutation of Σ_{j_1+⋯+j_n} moving the i-th source
/// block (of size sizes[i-1]) to block position s(i), order inside each block
/// preserved.  block_perm(s, {1,…,1}) == s.
Permutation block_perm(const Permutation& s, std::span<const std::size_t> sizes);
inline Permutation block_perm(const Permutation& s, std::initializer_list<std::size_t> sizes) {
  return block_perm(s, std::span<const std::size_t>(sizes.begin(), sizes.size()));
}

/// τ⟨n,m⟩: swaps a leading block of length n past a trailing block of length m.
Permutation block_transposition(std::size_t n, std::size_t m);

std::string to_string(const Permutation& s);

}  // namespace opal

template <>
struct std::hash<opal::Permutation> {
  std::size_t operator()(const opal::Permutation& p) const noexcept {
    std::size_t h = p.degree();
    for (int v : p.images()) h = h * 31 + static_cast<std::size_t>(v);
    return h;
  }
};
