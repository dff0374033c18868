#include "opal/h_functors.hpp"

namespace opal {

namespace {

Paren mirror_tree(const Paren& p) {
  if (p.is_leaf()) return p;
  return Paren::node(mirror_tree(p.right()), mirror_tree(p.left()));
}

Permutation reversal(std::size_t n) {
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(n - i);
  return Permutation(images);
}

}  // namespace

ZObject mirror(const ZObject& z) {
  const auto k = static_cast<int>(z.width());
  std::vector<int> marks;
  for (auto it = z.marks().elements().rbegin(); it != z.marks().elements().rend(); ++it) marks.push_back(k + 1 - *it);
  return ZObject(mirror_tree(z.tree()), marks);
}

HFunctor substitution_functor(const HCategory& h, const ZObject& w) {
  auto obj = [w](const ZObject& z) { return gamma_z(z, std::vector<ZObject>(z.arity(), w)); };
  auto mor = [w, obj](const HMorphism& f) {
    const std::vector<std::size_t> sizes(f.perm.degree(), w.arity());
    return HMorphism{obj(f.source), obj(f.target), block_perm(f.perm, std::span<const std::size_t>(sizes))};
  };
  return {"subst", &h, &h, obj, mor, h.id(h.unit()),
          [&h, obj](const ZObject& a, const ZObject& b) { return h.id(h.tensor(obj(a), obj(b))); }};
}

HFunctor pad_functor(const HCategory& h) {
  const auto& g = generators();
  const auto padded = gamma_y(g.m, {g.one, g.zero});
  const auto both = gamma_y(g.m, {padded, padded});
  const auto joined = gamma_y(g.m, {g.m, g.zero});
  const std::vector<ZObject> none;
  return {"pad",
          &h,
          &h,
          [&h](const ZObject& a) { return h.tensor(a, h.unit()); },
          [&h](const HMorphism& f) { return h.tensor(f, h.id(h.unit())); },
          eval_can_iso(h, g.zero, gamma_y(g.m, {g.zero, g.zero}), std::span<const ZObject>(none)),
          [&h, both, joined](const ZObject& a, const ZObject& b) {
            const std::vector<ZObject> ab{a, b};
            return eval_can_iso(h, both, joined, std::span<const ZObject>(ab));
          }};
}

HFunctor mirror_functor(const HCategory& h) {
  return {"mirror",
          &h,
          &h,
          [](const ZObject& a) { return mirror(a); },
          [](const HMorphism& f) {
            const auto w = reversal(f.perm.degree());
            return HMorphism{mirror(f.source), mirror(f.target), compose(w, compose(f.perm, w))};
          },
          h.id(h.unit()),
          [&h](const ZObject& a, const ZObject& b) { return h.braiding(mirror(a), mirror(b)); }};
}

}  // namespace opal
