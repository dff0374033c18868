#include "opal/json_io.hpp"

#include "opal/error.hpp"

namespace opal {

void to_json(json& j, const Permutation& p) { j = p.images(); }

void to_json(json& j, const Paren& p) {
  if (p.is_leaf()) j = "leaf";
  else j = json::array({json(p.left()), json(p.right())});
}

void to_json(json& j, const ZObject& z) {
  j = json{{"tree", json(z.tree())}, {"marks", z.marks().elements()}, {"width", z.width()}};
}

void to_json(json& j, const YObject& y) { j = json{{"z", json(y.z)}, {"sigma", json(y.sigma)}}; }

void to_json(json& j, const HMorphism& f) {
  j = json{{"source", json(f.source)}, {"target", json(f.target)}, {"perm", json(f.perm)}};
}

Permutation permutation_from_json(const json& j) {
  if (!j.is_array()) throw StructuralError("permutation: expected an array of images");
  return Permutation(j.get<std::vector<int>>());
}

Paren paren_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "leaf") return Paren::leaf();
  if (j.is_array() && j.size() == 2) return Paren::node(paren_from_json(j[0]), paren_from_json(j[1]));
  throw StructuralError("tree: expected \"leaf\" or a pair, got " + j.dump());
}

ZObject zobject_from_json(const json& j) {
  if (!j.is_object() || !j.contains("tree")) throw StructuralError("object: expected {\"tree\":…, \"marks\":[…]}");
  const auto marks = j.contains("marks") ? j.at("marks").get<std::vector<int>>() : std::vector<int>{};
  ZObject z(paren_from_json(j.at("tree")), marks);
  if (j.contains("width") && j.at("width").get<std::size_t>() != z.width())
    throw StructuralError("object: stated width " + j.at("width").dump() + " does not match the tree");
  return z;
}

YObject yobject_from_json(const json& j) {
  if (!j.is_object() || !j.contains("z")) throw StructuralError("Y-object: expected {\"z\":…, \"sigma\":[…]}");
  auto z = zobject_from_json(j.at("z"));
  auto sigma = j.contains("sigma") ? permutation_from_json(j.at("sigma")) : Permutation::identity(z.arity());
  return YObject(std::move(z), std::move(sigma));
}

}  // namespace opal
