#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opal/free_permutative.hpp"

namespace opal {

/// An endofunctor whose ξ-tower 2-cell is checked, together with what its
/// components should be: identities for a strict functor, isomorphisms for a
/// strong one.
template <SymmetricMonoidal C>
struct CellFunctor {
  enum class Kind { strict, strong, lax };
  LaxFunctor<C, C> functor;
  Kind kind = Kind::lax;
};

struct AdjunctionBounds {
  std::size_t max_tuple_length = 3;    // arrows of U C for the first triangle
  std::size_t max_list_length = 3;     // morphisms of L U C for the second triangle and ν
  std::size_t comonad_list_length = 2; // morphisms of L U C for the comonad laws
  std::size_t eta_arity = 2;           // arrows of U C for naturality of η
};

inline const std::vector<std::string>& adjunction_law_names() {
  static const std::vector<std::string> names{
      "triangle_unit",       "triangle_counit",    "eta_naturality",       "nu_naturality",
      "nu_not_invertible",   "xi_cell_naturality", "xi_cell_components",   "xi_cell_pasting",
      "comonad_counit_right", "comonad_coassociativity"};
  return names;
}

namespace adjunction_law {
enum : std::size_t {
  triangle_unit,
  triangle_counit,
  eta_naturality,
  nu_naturality,
  nu_not_invertible,
  xi_cell_naturality,
  xi_cell_components,
  xi_cell_pasting,
  comonad_counit_right,
  comonad_coassociativity,
  count
};
}  // namespace adjunction_law

/// The adjunction L ⊣ U between multicategories and permutative categories,
/// at C and at M = U C, all with the left-nested κ.  Arrows of U C are built
/// over `generators`, lists (objects of L U C) over `list_generators`.
///   triangle_unit     Uε∘η_{UC} = id on arrows of U C,
///   triangle_counit   ε_{LM}∘Lη = id on morphisms of L M (this is also the
///                     left counit law of the comonad W = LU),
///   eta_naturality    U L(UF)∘η = η∘UF for each functor F,
///   nu_naturality     ν: id ⇒ ηε is natural, nu_not_invertible: ν_x⃗ has no
///                     inverse once x⃗ is not a singleton,
///   xi_cell_*         ξ: ε∘LUF ⇒ F∘ε is natural, has the components its kind
///                     promises and pastes: ξ_{GF} = Gξ_F∘ξ_G LUF,
///   comonad_*         W(ε)∘δ = id and W(δ)∘δ = δ_W∘δ.
template <EnumerableCategory C>
SuiteReport adjunction_suite(std::string name, const C& c, const std::vector<typename C::Object>& generators,
                             const std::vector<typename C::Object>& list_generators,
                             const std::vector<CellFunctor<C>>& functors, AdjunctionBounds b, const Faults& faults,
                             Execution ex) {
  using Object = typename C::Object;
  using UC = Underlying<C>;
  using L1 = FreePermutative<UC>;
  using U2 = Underlying<L1>;
  using L2 = FreePermutative<U2>;
  using U3 = Underlying<L2>;
  using L3 = FreePermutative<U3>;
  using List = typename L1::Object;

  const UC uc(c, default_kappa_family<Object>(), faults);
  const L1 l1(uc);
  const U2 u2(l1, default_kappa_family<List>());
  const L2 l2(u2);
  const U3 u3(l2, default_kappa_family<typename L2::Object>());
  const L3 l3(u3);

  const auto eps = counit(uc, l1, faults);
  const auto eta = unit_multifunctor<UC>(u2);
  const auto delta = free_functor(eta, l1, l2);
  const auto eps_l1 = counit(u2, l2, faults);
  const auto u_eps = lax_to_multifunctor(eps, u2, uc, {}, false);
  const auto w_eps = free_functor(u_eps, l2, l1);
  const auto delta_w = free_functor(unit_multifunctor<U2>(u3), l2, l3);
  const auto w_delta = free_functor(lax_to_multifunctor(delta, u2, u3, {}, false), l2, l3);

  struct Lifted {
    const CellFunctor<C>* cell;
    Multifunctor<UC, UC> uf;
    LaxFunctor<L1, L1> luf;
    Multifunctor<U2, U2> uluf;
  };
  std::vector<Lifted> lifted;
  for (const auto& cf : functors) {
    auto uf = lax_to_multifunctor(cf.functor, uc, uc, {}, false);
    auto luf = free_functor(uf, l1, l1);
    auto uluf = lax_to_multifunctor(luf, u2, u2, {}, false);
    lifted.push_back({&cf, std::move(uf), std::move(luf), std::move(uluf)});
  }

  auto xi_cell = [&](const LaxFunctor<C, C>& F, const List& xs) {
    return xi_tower(F, std::span<const Object>(xs));
  };
  // (ηε)(m) as a morphism of L U C between singleton lists.
  auto eta_eps = [&](const typename L1::Morphism& m) {
    const auto src = eps.obj(l1.source(m)), tgt = eps.obj(l1.target(m));
    return typename L1::Morphism{{1}, {uc.make({src}, tgt, eps.mor(m))}};
  };
  auto invertible = [&](const typename C::Morphism& f) {
    for (const auto& g : c.hom(c.target(f), c.source(f)))
      if (c.compose(g, f) == c.id(c.source(f)) && c.compose(f, g) == c.id(c.target(f))) return true;
    return false;
  };

  Recorder rec(adjunction_law::count);

  ArrowTable<UC> table(uc, generators, b.max_tuple_length);
  rec.absorb(run_instances(adjunction_law::count, table.all().size(), [&](std::size_t i, Recorder& r) {
    const auto& phi = table.all()[i];
    r.check_equal(adjunction_law::triangle_unit, [&] { return std::pair{u_eps.arrow(eta.arrow(phi)), phi}; },
                  [&] { return json{{"arrow", phi}}; });
    if (phi.arity() > b.eta_arity) return;
    for (const auto& lf : lifted)
      r.check_equal(adjunction_law::eta_naturality,
                    [&] { return std::pair{lf.uluf.arrow(eta.arrow(phi)), eta.arrow(lf.uf.arrow(phi))}; },
                    [&] { return json{{"functor", lf.cell->functor.name}, {"arrow", phi}}; });
  }, ex));

  std::vector<List> lists;
  for (std::size_t len = 0; len <= b.max_list_length; ++len)
    for (auto& t : weighted_tuples(list_generators, len, [](const Object&) { return 0; }, 0)) lists.push_back(std::move(t));
  const auto k = lists.size();
  rec.absorb(run_instances(adjunction_law::count, k * k, [&](std::size_t i, Recorder& r) {
    const auto& xs = lists[i / k];
    const auto& ys = lists[i % k];

    if (i % k == 0) {
      const auto n = nu(uc, xs);
      if (xs.size() != 1)
        r.check(adjunction_law::nu_not_invertible, [&] {
          for (const auto& g : l1.hom(l1.target(n), xs))
            if (l1.compose(g, n) == l1.id(xs) && l1.compose(n, g) == l1.id(l1.target(n))) return false;
          return true;
        }, [&] { return json{{"list", xs}}; });

      for (const auto& lf : lifted) {
        const auto cell = xi_cell(lf.cell->functor, xs);
        using Kind = typename CellFunctor<C>::Kind;
        if (lf.cell->kind == Kind::strict)
          r.check_equal(adjunction_law::xi_cell_components, [&] { return std::pair{cell, c.id(c.source(cell))}; },
                        [&] { return json{{"functor", lf.cell->functor.name}, {"list", xs}}; });
        else if (lf.cell->kind == Kind::strong)
          r.check(adjunction_law::xi_cell_components, [&] { return invertible(cell); },
                  [&] { return json{{"functor", lf.cell->functor.name}, {"list", xs}}; });
        for (const auto& lg : lifted) {
          const auto& F = lf.cell->functor;
          const auto& G = lg.cell->functor;
          r.check_equal(adjunction_law::xi_cell_pasting, [&] {
            const auto fx = F.map_objects(std::span<const Object>(xs));
            return std::pair{xi_cell(compose_lax(G, F), xs), c.compose(G.mor(cell), xi_cell(G, fx))};
          }, [&] { return json{{"functors", {F.name, G.name}}, {"list", xs}}; });
        }
      }
    }

    const bool small = xs.size() <= b.comonad_list_length && ys.size() <= b.comonad_list_length;
    for (const auto& m : l1.hom(xs, ys)) {
      auto describe = [&] { return json{{"morphism", m}}; };
      r.check_equal(adjunction_law::triangle_counit, [&] { return std::pair{eps_l1.mor(delta.mor(m)), m}; },
                    describe);
      r.check_equal(adjunction_law::nu_naturality,
                    [&] { return std::pair{l1.compose(eta_eps(m), nu(uc, xs)), l1.compose(nu(uc, ys), m)}; },
                    describe);
      for (const auto& lf : lifted) {
        const auto& F = lf.cell->functor;
        r.check_equal(adjunction_law::xi_cell_naturality, [&] {
          return std::pair{c.compose(F.mor(eps.mor(m)), xi_cell(F, xs)),
                           c.compose(xi_cell(F, ys), eps.mor(lf.luf.mor(m)))};
        }, [&] { return json{{"functor", F.name}, {"morphism", m}}; });
      }
      if (!small) continue;
      const auto dm = delta.mor(m);
      r.check_equal(adjunction_law::comonad_counit_right, [&] { return std::pair{w_eps.mor(dm), m}; }, describe);
      r.check_equal(adjunction_law::comonad_coassociativity,
                    [&] { return std::pair{w_delta.mor(dm), delta_w.mor(dm)}; }, describe);
    }
  }, ex));

  auto report = make_report(std::move(name), adjunction_law_names(), std::move(rec));
  json names = json::array();
  for (const auto& cf : functors) names.push_back(cf.functor.name);
  report.parameters = json{{"generators", generators.size()},
                           {"list_generators", list_generators.size()},
                           {"functors", names},
                           {"max_tuple_length", b.max_tuple_length},
                           {"max_list_length", b.max_list_length},
                           {"comonad_list_length", b.comonad_list_length},
                           {"eta_arity", b.eta_arity},
                           {"lists", k},
                           {"arrows", table.all().size()}};
  return report;
}

}  // namespace opal
