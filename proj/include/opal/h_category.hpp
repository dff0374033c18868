#pragma once

#include <string>
#include <vector>

#include "opal/shapes.hpp"
#include "opal/symgrp.hpp"

namespace opal {

/// A morphism of H: a permutation of the n generator copies, between two
/// objects of the same level n.  Position i of the source goes to position
/// perm(i) of the target.
struct HMorphism {
  ZObject source;
  ZObject target;
  Permutation perm;

  friend bool operator==(const HMorphism&, const HMorphism&) = default;
  friend auto operator<=>(const HMorphism&, const HMorphism&) = default;
};

/// The free symmetric monoidal category on one object.  Objects are ZObjects
/// (the level is the arity); each hom-set between objects of level n is a
/// copy of Σ_n.  α and the unitor are identity permutations and the braiding
/// is the block transposition τ⟨n,m⟩.
class HCategory {
public:
  using Object = ZObject;
  using Morphism = HMorphism;

  Object unit() const { return ZObject(); }
  Object tensor(const Object& a, const Object& b) const { return tensor_z(a, b); }
  Morphism tensor(const Morphism& f, const Morphism& g) const;
  Morphism id(const Object& a) const;
  /// g∘f; throws StructuralError unless f's target is g's source.
  Morphism compose(const Morphism& g, const Morphism& f) const;
  const Object& source(const Morphism& f) const { return f.source; }
  const Object& target(const Morphism& f) const { return f.target; }

  /// (a⊕b)⊕c → a⊕(b⊕c)
  Morphism associator(const Object& a, const Object& b, const Object& c) const;
  Morphism associator_inverse(const Object& a, const Object& b, const Object& c) const;
  /// a⊕e → a
  Morphism right_unitor(const Object& a) const;
  Morphism right_unitor_inverse(const Object& a) const;
  /// a⊕b → b⊕a
  Morphism braiding(const Object& a, const Object& b) const;

  /// Empty unless the levels agree, otherwise one morphism per permutation.
  std::vector<Morphism> hom(const Object& a, const Object& b) const;

  /// All objects of width 1..max_width, ordered by width then ZObject order.
  static std::vector<Object> objects_up_to_width(std::size_t max_width);
};

std::string to_string(const HMorphism& f);

}  // namespace opal
