#pragma once

#include <concepts>
#include <span>
#include <vector>

#include "opal/error.hpp"
#include "opal/normal_form.hpp"
#include "opal/operad_y.hpp"

namespace opal {

/// A symmetric monoidal category presented by its structure maps.  The left
/// unitor is not part of the interface: it is c∘τ.
template <class C>
concept SymmetricMonoidal = requires(const C& c, const typename C::Object& a, const typename C::Morphism& f) {
  typename C::Object;
  typename C::Morphism;
  { c.unit() } -> std::convertible_to<typename C::Object>;
  { c.tensor(a, a) } -> std::same_as<typename C::Object>;
  { c.tensor(f, f) } -> std::same_as<typename C::Morphism>;
  { c.id(a) } -> std::same_as<typename C::Morphism>;
  { c.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { c.source(f) } -> std::convertible_to<typename C::Object>;
  { c.target(f) } -> std::convertible_to<typename C::Object>;
  { c.associator(a, a, a) } -> std::same_as<typename C::Morphism>;
  { c.associator_inverse(a, a, a) } -> std::same_as<typename C::Morphism>;
  { c.right_unitor(a) } -> std::same_as<typename C::Morphism>;
  { c.right_unitor_inverse(a) } -> std::same_as<typename C::Morphism>;
  { c.braiding(a, a) } -> std::same_as<typename C::Morphism>;
  { a == a } -> std::convertible_to<bool>;
  { f == f } -> std::convertible_to<bool>;
};

/// Hom-sets can be listed; required by the exhaustive law suites.
template <class C>
concept EnumerableCategory = SymmetricMonoidal<C> && requires(const C& c, const typename C::Object& a) {
  { c.hom(a, a) } -> std::same_as<std::vector<typename C::Morphism>>;
};

template <SymmetricMonoidal C>
typename C::Object eval_term(const C& c, const Term& t, std::span<const typename C::Object> xs) {
  switch (t.kind()) {
    case Term::Kind::unit: return c.unit();
    case Term::Kind::var: return xs[t.index()];
    case Term::Kind::pair: return c.tensor(eval_term(c, t.left(), xs), eval_term(c, t.right(), xs));
  }
  throw StructuralError("eval_term: bad term");
}

template <SymmetricMonoidal C>
typename C::Morphism eval_term_mor(const C& c, const Term& t, std::span<const typename C::Morphism> fs) {
  switch (t.kind()) {
    case Term::Kind::unit: return c.id(c.unit());
    case Term::Kind::var: return fs[t.index()];
    case Term::Kind::pair: return c.tensor(eval_term_mor(c, t.left(), fs), eval_term_mor(c, t.right(), fs));
  }
  throw StructuralError("eval_term_mor: bad term");
}

/// y applied to a tuple of objects.
template <SymmetricMonoidal C>
typename C::Object eval_obj(const C& c, const YObject& y, std::span<const typename C::Object> xs) {
  if (xs.size() != y.arity())
    throw StructuralError("eval_obj: " + std::to_string(xs.size()) + " objects for arity " + std::to_string(y.arity()));
  return eval_term(c, term_of(y), xs);
}

/// The functor Cⁿ → C induced by y, applied to a tuple of morphisms.
template <SymmetricMonoidal C>
typename C::Morphism eval_obj_mor(const C& c, const YObject& y, std::span<const typename C::Morphism> fs) {
  if (fs.size() != y.arity())
    throw StructuralError("eval_obj_mor: " + std::to_string(fs.size()) + " morphisms for arity " +
                          std::to_string(y.arity()));
  return eval_term_mor(c, term_of(y), fs);
}

/// The structure map a single move denotes, on the object the subterm `t`
/// evaluates to.
template <SymmetricMonoidal C>
typename C::Morphism move_morphism(const C& c, const Term& t, Move m, std::span<const typename C::Object> xs) {
  auto ev = [&](const Term& u) { return eval_term(c, u, xs); };
  switch (m) {
    case Move::assoc_lr: return c.associator(ev(t.left().left()), ev(t.left().right()), ev(t.right()));
    case Move::assoc_rl: return c.associator_inverse(ev(t.left()), ev(t.right().left()), ev(t.right().right()));
    case Move::unit_r: return c.right_unitor(ev(t.left()));
    case Move::unit_r_inv: return c.right_unitor_inverse(ev(t));
    case Move::unit_l: {
      const auto a = ev(t.right());
      return c.compose(c.right_unitor(a), c.braiding(c.unit(), a));
    }
    case Move::unit_l_inv: {
      const auto a = ev(t);
      return c.compose(c.braiding(a, c.unit()), c.right_unitor_inverse(a));
    }
    case Move::braid: return c.braiding(ev(t.left()), ev(t.right()));
  }
  throw StructuralError("move_morphism: bad move");
}

/// The step's morphism whiskered by identities out to the whole term.
template <SymmetricMonoidal C>
typename C::Morphism step_morphism(const C& c, const Term& whole, const Step& s,
                                   std::span<const typename C::Object> xs) {
  // Walk down recording the siblings, then tensor back up.
  std::vector<const Term*> spine{&whole};
  for (bool right : s.path) spine.push_back(right ? &spine.back()->right() : &spine.back()->left());
  auto mor = move_morphism(c, *spine.back(), s.move, xs);
  for (std::size_t d = s.path.size(); d-- > 0;) {
    const Term& parent = *spine[d];
    if (s.path[d]) mor = c.tensor(c.id(eval_term(c, parent.left(), xs)), mor);
    else mor = c.tensor(mor, c.id(eval_term(c, parent.right(), xs)));
  }
  return mor;
}

template <SymmetricMonoidal C>
typename C::Morphism realize(const C& c, const Rewrite& rw, std::span<const typename C::Object> xs) {
  auto mor = c.id(eval_term(c, rw.start(), xs));
  for (std::size_t i = 0; i < rw.steps().size(); ++i)
    mor = c.compose(step_morphism(c, rw.terms()[i], rw.steps()[i], xs), mor);
  return mor;
}

/// The canonical isomorphism eval_obj(a, xs) → eval_obj(b, xs) induced by the
/// unique morphism a → b of Y(n).
template <SymmetricMonoidal C>
typename C::Morphism eval_can_iso(const C& c, const YObject& a, const YObject& b,
                                  std::span<const typename C::Object> xs) {
  if (a.arity() != b.arity() || a.arity() != xs.size())
    throw StructuralError("eval_can_iso: arities " + std::to_string(a.arity()) + ", " + std::to_string(b.arity()) +
                          " with " + std::to_string(xs.size()) + " objects");
  if (a == b) return c.id(eval_obj(c, a, xs));
  return realize(c, coherence_path(term_of(a), term_of(b)), xs);
}

}  // namespace opal
