#include "opal/h_category.hpp"

#include "opal/error.hpp"

namespace opal {

HMorphism HCategory::tensor(const HMorphism& f, const HMorphism& g) const {
  return {tensor_z(f.source, g.source), tensor_z(f.target, g.target), block_sum({f.perm, g.perm})};
}

HMorphism HCategory::id(const ZObject& a) const { return {a, a, Permutation::identity(a.arity())}; }

HMorphism HCategory::compose(const HMorphism& g, const HMorphism& f) const {
  if (!(f.target == g.source))
    throw StructuralError("H compose: " + to_string(f.target) + " does not match " + to_string(g.source));
  return {f.source, g.target, opal::compose(g.perm, f.perm)};
}

HMorphism HCategory::associator(const ZObject& a, const ZObject& b, const ZObject& c) const {
  const auto n = a.arity() + b.arity() + c.arity();
  return {tensor_z(tensor_z(a, b), c), tensor_z(a, tensor_z(b, c)), Permutation::identity(n)};
}

HMorphism HCategory::associator_inverse(const ZObject& a, const ZObject& b, const ZObject& c) const {
  const auto n = a.arity() + b.arity() + c.arity();
  return {tensor_z(a, tensor_z(b, c)), tensor_z(tensor_z(a, b), c), Permutation::identity(n)};
}

HMorphism HCategory::right_unitor(const ZObject& a) const {
  return {tensor_z(a, unit()), a, Permutation::identity(a.arity())};
}

HMorphism HCategory::right_unitor_inverse(const ZObject& a) const {
  return {a, tensor_z(a, unit()), Permutation::identity(a.arity())};
}

HMorphism HCategory::braiding(const ZObject& a, const ZObject& b) const {
  return {tensor_z(a, b), tensor_z(b, a), block_transposition(a.arity(), b.arity())};
}

std::vector<HMorphism> HCategory::hom(const ZObject& a, const ZObject& b) const {
  std::vector<HMorphism> out;
  if (a.arity() != b.arity()) return out;
  for (auto& p : Permutation::all(a.arity())) out.push_back({a, b, std::move(p)});
  return out;
}

std::vector<ZObject> HCategory::objects_up_to_width(std::size_t max_width) {
  std::vector<ZObject> out;
  for (std::size_t w = 1; w <= max_width; ++w)
    for (auto& z : ZObject::all_of_width(w)) out.push_back(std::move(z));
  return out;
}

std::string to_string(const HMorphism& f) {
  return to_string(f.source) + " -" + to_string(f.perm) + "-> " + to_string(f.target);
}

}  // namespace opal
