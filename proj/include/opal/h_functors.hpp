#pragma once

#include "opal/h_category.hpp"
#include "opal/lax.hpp"

namespace opal {

using HFunctor = LaxFunctor<HCategory, HCategory>;

/// Strict: every marked leaf is replaced by the tree of `w` (unmarked leaves
/// are kept), and a permutation moves the resulting blocks of w.arity()
/// generators as it moved the generators.
HFunctor substitution_functor(const HCategory& h, const ZObject& w);

/// Strong but not strict: a ↦ a⊕e, f ↦ f⊕1_e, with η and ξ the canonical
/// isomorphisms e → e⊕e and (a⊕e)⊕(b⊕e) → (a⊕b)⊕e.
HFunctor pad_functor(const HCategory& h);

/// Strong but not strict: reverses every tree, conjugates permutations by the
/// order reversal, and uses the braiding Fa⊕Fb → Fb⊕Fa as ξ.
HFunctor mirror_functor(const HCategory& h);

/// Reflects a tree left to right, marks included.
ZObject mirror(const ZObject& z);

}  // namespace opal
