#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "opal/faults.hpp"
#include "opal/shapes.hpp"
#include "opal/symgrp.hpp"

namespace opal {

/// An object of Y(n): a Z(n) shape together with a permutation routing the
/// n variables into its marked slots.  Variable i is placed in the marked
/// slot numbered sigma(i) (slots counted in increasing leaf order).
///
/// Y(n) has exactly one morphism between any two objects, so morphisms carry
/// no data beyond their endpoints and are never materialised.
struct YObject {
  ZObject z;
  Permutation sigma;

  YObject() = default;  // the generator 0 ∈ Y(0)
  YObject(ZObject z, Permutation sigma);

  std::size_t arity() const noexcept { return z.arity(); }

  friend bool operator==(const YObject&, const YObject&) = default;
  friend auto operator<=>(const YObject&, const YObject&) = default;
};

/// The unique morphism of Y(n) between two objects of equal arity.
struct YMorphism {
  YObject source;
  YObject target;

  YMorphism(YObject source, YObject target);
  friend bool operator==(const YMorphism&, const YMorphism&) = default;
};

struct YGenerators {
  YObject zero;  // (1, ∅, id₀): evaluates to the unit
  YObject one;   // (1, {1}, id₁): the operad unit
  YObject m;     // ((1,1), {1,2}, id₂): the monoidal product
};

const YGenerators& generators();

/// Operad composition.  The shape is gamma_z(b.z; parts permuted into the slot
/// order of b), the permutation is block_perm(b.sigma, arities) ∘
/// block_sum(part sigmas).
YObject gamma_y(const YObject& b, std::span<const YObject> parts, const Faults& faults = {});
inline YObject gamma_y(const YObject& b, std::initializer_list<YObject> parts) {
  return gamma_y(b, std::span<const YObject>(parts.begin(), parts.size()));
}

/// Right Σ_n action, y·s.  Evaluating y·s on act_inverse(s, xs) gives the same
/// object as evaluating y on xs.
YObject act_y(const YObject& y, const Permutation& s);

/// Assigns to each tuple of objects an object of Y(n) of matching arity.
template <class Object>
using KappaFamily = std::function<YObject(std::span<const Object>)>;

/// κ_0 = 0, κ_1 = 1, κ_n = γ(m; κ_{n−1}, 1): products nested to the left.
const YObject& default_kappa(std::size_t n);
/// κ_0 = 0, κ_1 = 1, κ_n = γ(m; 1, κ_{n−1}): products nested to the right.
const YObject& right_nested_kappa(std::size_t n);

template <class Object>
KappaFamily<Object> default_kappa_family() {
  return [](std::span<const Object> xs) { return default_kappa(xs.size()); };
}

template <class Object>
KappaFamily<Object> right_nested_kappa_family() {
  return [](std::span<const Object> xs) { return right_nested_kappa(xs.size()); };
}

/// The tuple-dependent family on objects of the free symmetric monoidal
/// category on one object (whose objects are ZObjects): graft the tuple's
/// trees into a fixed β ∈ Z(n), mark the first leaf contributed by each tree,
/// and twist by a transposition (first two indices for odd n ≥ 3, last two
/// for even n ≥ 2).
YObject exotic_kappa(std::span<const ZObject> xs);
/// The fixed β ∈ Z(n) used by exotic_kappa: an unmarked leaf followed by a
/// right comb of n marked leaves.
ZObject exotic_beta(std::size_t n);
inline KappaFamily<ZObject> exotic_kappa_family() {
  return [](std::span<const ZObject> xs) { return exotic_kappa(xs); };
}
/// S = {1, j_1+1, j_1+j_2+1, …} for input widths j_1,…,j_n: the indices,
/// among δ's marked leaves, of the first leaf of each grafted tree.
std::vector<int> exotic_slot_indices(std::span<const std::size_t> widths);

/// Every Y-object with the given arity and width.
std::vector<YObject> all_y_objects(std::size_t arity, std::size_t width);

std::string to_string(const YObject& y);

}  // namespace opal
