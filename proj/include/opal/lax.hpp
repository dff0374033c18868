#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "opal/multicat_laws.hpp"

namespace opal {

/// A lax symmetric monoidal functor F: C → D with unit map η: e_D → F(e_C)
/// and product map ξ(a,b): Fa⊕Fb → F(a⊕b).
template <SymmetricMonoidal C, SymmetricMonoidal D>
struct LaxFunctor {
  using Dom = C;
  using Cod = D;

  std::string name;
  const C* dom = nullptr;
  const D* cod = nullptr;
  std::function<typename D::Object(const typename C::Object&)> obj;
  std::function<typename D::Morphism(const typename C::Morphism&)> mor;
  typename D::Morphism eta;
  std::function<typename D::Morphism(const typename C::Object&, const typename C::Object&)> xi;

  std::vector<typename D::Object> map_objects(std::span<const typename C::Object> xs) const {
    std::vector<typename D::Object> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(obj(x));
    return out;
  }
};

template <SymmetricMonoidal C>
LaxFunctor<C, C> identity_lax(const C& c) {
  return {"identity",
          &c,
          &c,
          [](const typename C::Object& a) { return a; },
          [](const typename C::Morphism& f) { return f; },
          c.id(c.unit()),
          [&c](const typename C::Object& a, const typename C::Object& b) { return c.id(c.tensor(a, b)); }};
}

/// G∘F, with η = G(η_F)∘η_G and ξ = G(ξ_F)∘ξ_G.
template <SymmetricMonoidal C, SymmetricMonoidal D, SymmetricMonoidal E>
LaxFunctor<C, E> compose_lax(const LaxFunctor<D, E>& g, const LaxFunctor<C, D>& f) {
  const E& e = *g.cod;
  return {g.name + "∘" + f.name,
          f.dom,
          g.cod,
          [g, f](const typename C::Object& a) { return g.obj(f.obj(a)); },
          [g, f](const typename C::Morphism& m) { return g.mor(f.mor(m)); },
          e.compose(g.mor(f.eta), g.eta),
          [g, f, &e](const typename C::Object& a, const typename C::Object& b) {
            return e.compose(g.mor(f.xi(a, b)), g.xi(f.obj(a), f.obj(b)));
          }};
}

/// κ̄x⃗ for the left-nested family, without going through a κ table.
template <SymmetricMonoidal C>
typename C::Object left_nested(const C& c, std::span<const typename C::Object> xs) {
  return eval_obj(c, default_kappa(xs.size()), xs);
}

/// ξ_n: κ̄F(x⃗) → F(κ̄x⃗) for the left-nested κ: ξ_0 = η, ξ_1 = id and
/// ξ_n = ξ(κ̄x̂, x_n)∘(ξ_{n−1}⊕1).
template <SymmetricMonoidal C, SymmetricMonoidal D>
typename D::Morphism xi_tower(const LaxFunctor<C, D>& f, std::span<const typename C::Object> xs) {
  const D& d = *f.cod;
  if (xs.empty()) return f.eta;
  auto acc = d.id(f.obj(xs[0]));
  for (std::size_t n = 2; n <= xs.size(); ++n) {
    const auto head = xs.first(n - 1);
    const auto& last = xs[n - 1];
    acc = d.compose(f.xi(left_nested(*f.dom, head), last), d.tensor(acc, d.id(f.obj(last))));
  }
  return acc;
}

/// A multifunctor M → N given by its object and arrow maps.
template <Multicategory M, Multicategory N>
struct Multifunctor {
  std::string name;
  std::function<typename N::Object(const typename M::Object&)> obj;
  std::function<typename N::Arrow(const typename M::Arrow&)> arrow;
};

inline const std::vector<std::string>& lax_law_names() {
  static const std::vector<std::string> names{"functor_identity", "functor_composition", "xi_naturality",
                                              "unit_coherence",   "associativity_coherence",
                                              "transposition_coherence"};
  return names;
}

namespace lax_law {
enum : std::size_t {
  functor_identity,
  functor_composition,
  xi_naturality,
  unit_coherence,
  associativity_coherence,
  transposition_coherence,
  count
};
}  // namespace lax_law

/// Checks that F is a functor, that ξ is natural, and the unit,
/// associativity and transposition coherence diagrams, on every tuple of
/// `objects` of length at most 3 and every morphism between them.
template <EnumerableCategory C, SymmetricMonoidal D>
SuiteReport lax_coherence_suite(const LaxFunctor<C, D>& F, const std::vector<typename C::Object>& objects,
                                Execution ex) {
  using Object = typename C::Object;
  const C& c = *F.dom;
  const D& d = *F.cod;
  const auto k = objects.size();
  auto rec = run_instances(lax_law::count, k * k * k, [&](std::size_t i, Recorder& r) {
    const auto& a = objects[i / (k * k)];
    const auto& b = objects[(i / k) % k];
    const auto& x = objects[i % k];
    auto describe = [&] { return json{{"functor", F.name}, {"objects", std::vector<Object>{a, b, x}}}; };

    if (i % (k * k) == 0) {
      r.check_equal(lax_law::functor_identity, [&] { return std::pair{F.mor(c.id(a)), d.id(F.obj(a))}; }, describe);
      r.check_equal(lax_law::unit_coherence, [&] {
        const auto Fa = F.obj(a);
        const auto lhs = d.compose(F.mor(c.right_unitor(a)),
                                   d.compose(F.xi(a, c.unit()), d.tensor(d.id(Fa), F.eta)));
        return std::pair{lhs, d.right_unitor(Fa)};
      }, describe);
    }
    if (i % k == 0)
      r.check_equal(lax_law::transposition_coherence, [&] {
        return std::pair{d.compose(F.mor(c.braiding(a, b)), F.xi(a, b)),
                         d.compose(F.xi(b, a), d.braiding(F.obj(a), F.obj(b)))};
      }, describe);

    r.check_equal(lax_law::associativity_coherence, [&] {
      const auto Fa = F.obj(a), Fb = F.obj(b), Fx = F.obj(x);
      const auto left = d.compose(F.mor(c.associator(a, b, x)),
                                  d.compose(F.xi(c.tensor(a, b), x), d.tensor(F.xi(a, b), d.id(Fx))));
      const auto right = d.compose(F.xi(a, c.tensor(b, x)),
                                   d.compose(d.tensor(d.id(Fa), F.xi(b, x)), d.associator(Fa, Fb, Fx)));
      return std::pair{left, right};
    }, describe);

    for (const auto& f : c.hom(a, b))
      for (const auto& g : c.hom(b, x))
        r.check_equal(lax_law::functor_composition,
                      [&] { return std::pair{F.mor(c.compose(g, f)), d.compose(F.mor(g), F.mor(f))}; },
                      [&] { return json{{"functor", F.name}, {"f", f}, {"g", g}}; });

    // ξ natural in both variables: f: a → b on the left, g: b → x on the right.
    for (const auto& f : c.hom(a, b))
      for (const auto& g : c.hom(b, x))
        r.check_equal(lax_law::xi_naturality, [&] {
          return std::pair{d.compose(F.mor(c.tensor(f, g)), F.xi(a, b)),
                           d.compose(F.xi(b, x), d.tensor(F.mor(f), F.mor(g)))};
        }, [&] { return json{{"functor", F.name}, {"f", f}, {"g", g}}; });
  }, ex);
  auto report = make_report("lax_coherence:" + F.name, lax_law_names(), std::move(rec));
  report.parameters = json{{"objects", k}};
  return report;
}

/// The multifunctor U_κF: U_κC → U_κD for the left-nested κ on both sides,
/// F_n(φ) = F(φ)∘ξ_n.  Unless `validate` is false the coherence of F is
/// checked first on `probes` and an incoherent F is rejected.
template <EnumerableCategory C, SymmetricMonoidal D>
Multifunctor<Underlying<C>, Underlying<D>> lax_to_multifunctor(const LaxFunctor<C, D>& F, const Underlying<C>& uc,
                                                               const Underlying<D>& ud,
                                                               const std::vector<typename C::Object>& probes,
                                                               bool validate = true) {
  if (validate) {
    const auto report = lax_coherence_suite(F, probes, Execution::serial);
    for (const auto& law : report.laws)
      if (!law.passed()) throw StructuralError("lax functor " + F.name + " fails " + law.name);
  }
  using Object = typename C::Object;
  using Arrow = typename Underlying<C>::Arrow;
  return {"U(" + F.name + ")", F.obj, [F, &uc, &ud](const Arrow& phi) {
            const std::span<const Object> xs(phi.source);
            const auto fx = F.map_objects(xs);
            const std::span<const typename D::Object> fxs(fx);
            if (!(uc.kappa(xs) == default_kappa(xs.size())) || !(ud.kappa(fxs) == default_kappa(xs.size())))
              throw StructuralError("U_κF needs the left-nested κ on both sides");
            return typename Underlying<D>::Arrow{fx, F.obj(phi.target),
                                                 F.cod->compose(F.mor(phi.payload), xi_tower(F, xs))};
          }};
}

/// The lax functor determined by a multifunctor between left-nested
/// underlying multicategories: F is the action on 1-arrows, η the image of
/// id⁰_e and ξ(a,b) the image of id²_{a⊕b}.
template <SymmetricMonoidal C, SymmetricMonoidal D>
LaxFunctor<C, D> multifunctor_to_lax(const Multifunctor<Underlying<C>, Underlying<D>>& Fh, const Underlying<C>& uc,
                                     const Underlying<D>& ud) {
  const C& c = uc.category();
  using Object = typename C::Object;
  return {"lax(" + Fh.name + ")",
          &c,
          &ud.category(),
          Fh.obj,
          [Fh, &c, &uc](const typename C::Morphism& f) {
            return Fh.arrow(uc.make({c.source(f)}, c.target(f), f)).payload;
          },
          Fh.arrow(uc.make({}, c.unit(), c.id(c.unit()))).payload,
          [Fh, &c, &uc](const Object& a, const Object& b) {
            const auto ab = c.tensor(a, b);
            return Fh.arrow(uc.make({a, b}, ab, c.id(ab))).payload;
          }};
}

inline const std::vector<std::string>& multifunctor_law_names() {
  static const std::vector<std::string> names{"preserves_identity", "preserves_action", "preserves_gamma"};
  return names;
}

/// Checks that Fh preserves identities, the symmetric group actions and Γ on
/// every arrow over `generators` with source length at most max_length, Γ
/// on every diagram whose source tuples total at most max_length.
template <Multicategory M, Multicategory N>
SuiteReport multifunctor_suite(const Multifunctor<M, N>& Fh, const M& m, const N& n,
                               const std::vector<typename M::Object>& generators, std::size_t max_length,
                               Execution ex) {
  using Arrow = typename M::Arrow;
  using NArrow = typename N::Arrow;
  ArrowTable<M> table(m, generators, max_length);
  const auto& arrows = table.all();
  auto rec = run_instances(3, arrows.size(), [&](std::size_t i, Recorder& r) {
    const auto& f = arrows[i];
    if (f.arity() == 1 && f == m.identity(f.target))
      r.check_equal(0, [&] { return std::pair{Fh.arrow(f), n.identity(Fh.obj(f.target))}; },
                    [&] { return json{{"object", f.target}}; });
    const auto ff = Fh.arrow(f);
    for (const auto& s : Permutation::all(f.arity()))
      r.check_equal(1, [&] { return std::pair{Fh.arrow(m.sigma_star(f, s)), n.sigma_star(ff, s)}; },
                    [&] { return json{{"arrow", f}, {"s", s}}; });
    table.for_each_inner(f.source, max_length - f.arity(), [&](const std::vector<Arrow>& gs) {
      r.check_equal(2, [&] {
        std::vector<NArrow> mapped;
        for (const auto& g : gs) mapped.push_back(Fh.arrow(g));
        return std::pair{Fh.arrow(m.gamma(f, std::span<const Arrow>(gs))), n.gamma(ff, std::span<const NArrow>(mapped))};
      }, [&] { return json{{"outer", f}, {"inner", gs}}; });
    });
  }, ex);
  auto report = make_report("multifunctor:" + Fh.name, multifunctor_law_names(), std::move(rec));
  report.parameters = json{{"arrows", arrows.size()}, {"max_tuple_length", max_length}};
  return report;
}

inline const std::vector<std::string>& round_trip_law_names() {
  static const std::vector<std::string> names{"lax_objects", "lax_morphisms", "lax_eta", "lax_xi",
                                              "multi_arrows"};
  return names;
}

/// Both round trips of the lax/multifunctor correspondence for an
/// endofunctor of C: F against multifunctor_to_lax(lax_to_multifunctor(F))
/// on `objects` and their hom-sets, and Fh = U_κF against
/// lax_to_multifunctor(multifunctor_to_lax(Fh)) on every arrow over
/// `objects` with source length at most max_length.
template <EnumerableCategory C>
SuiteReport round_trip_suite(const LaxFunctor<C, C>& F, const Underlying<C>& u,
                             const std::vector<typename C::Object>& objects, std::size_t max_length, Execution ex) {
  using Object = typename C::Object;
  const C& c = *F.dom;
  const auto Fh = lax_to_multifunctor(F, u, u, objects);
  const auto back = multifunctor_to_lax(Fh, u, u);
  const auto again = lax_to_multifunctor(back, u, u, objects, false);
  const auto k = objects.size();
  auto rec = run_instances(5, k * k, [&](std::size_t i, Recorder& r) {
    const auto& a = objects[i / k];
    const auto& b = objects[i % k];
    if (i == 0) r.check_equal(2, [&] { return std::pair{back.eta, F.eta}; }, [] { return json("eta"); });
    if (i % k == 0)
      r.check_equal(0, [&] { return std::pair{back.obj(a), F.obj(a)}; }, [&] { return json{{"object", a}}; });
    for (const auto& f : c.hom(a, b))
      r.check_equal(1, [&] { return std::pair{back.mor(f), F.mor(f)}; }, [&] { return json{{"morphism", f}}; });
    r.check_equal(3, [&] { return std::pair{back.xi(a, b), F.xi(a, b)}; },
                  [&] { return json{{"objects", std::vector<Object>{a, b}}}; });
  }, ex);
  ArrowTable<Underlying<C>> table(u, objects, max_length);
  rec.absorb(run_instances(5, table.all().size(), [&](std::size_t i, Recorder& r) {
    const auto& phi = table.all()[i];
    r.check_equal(4, [&] { return std::pair{again.arrow(phi), Fh.arrow(phi)}; }, [&] { return json{{"arrow", phi}}; });
  }, ex));
  auto report = make_report("round_trip:" + F.name, round_trip_law_names(), std::move(rec));
  report.parameters = json{{"objects", k}, {"arrows", table.all().size()}, {"max_tuple_length", max_length}};
  return report;
}

/// φ⟨j_s⟩: κ_j → γ(κ_n; κ_{j_1},…,κ_{j_n}) applied to x⃗, for the left-nested κ.
template <SymmetricMonoidal C>
typename C::Morphism phi_split(const C& c, std::span<const std::size_t> sizes,
                               std::span<const typename C::Object> xs) {
  std::vector<YObject> parts;
  for (auto s : sizes) parts.push_back(default_kappa(s));
  return eval_can_iso(c, default_kappa(xs.size()), gamma_y(default_kappa(sizes.size()), parts), xs);
}

inline const std::vector<std::string>& xi_lemma_names() {
  static const std::vector<std::string> names{"xi1", "xi2"};
  return names;
}

/// The two ξ-tower lemmas.  xi1: F(φ_qr)∘ξ_j = ξ∘(ξ_q⊕ξ_r)∘φ_qr for every
/// split q+r = j of every tuple with 1 ≤ j ≤ max_j; xi2:
/// F(φ⟨j_s⟩)∘ξ_j = ξ_n∘κ_n⟨ξ_{j_s}⟩∘φ⟨j_s⟩ for every decomposition
/// j = j_1+⋯+j_n (j_s ≥ 0) with n ≤ max_n.
template <SymmetricMonoidal C, SymmetricMonoidal D>
SuiteReport xi_lemma_suite(const LaxFunctor<C, D>& F, const std::vector<typename C::Object>& objects,
                           std::size_t max_j, std::size_t max_n, Execution ex) {
  using Object = typename C::Object;
  using DMor = typename D::Morphism;
  const D& d = *F.cod;
  const C& c = *F.dom;
  std::vector<std::vector<Object>> tuples;
  for (std::size_t j = 0; j <= max_j; ++j)
    for (auto& t : weighted_tuples(objects, j, [](const Object&) { return 0; }, 0)) tuples.push_back(std::move(t));

  auto compositions = [](std::size_t j, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto& self, std::size_t left) -> void {
      if (cur.size() + 1 == n) {
        cur.push_back(left);
        out.push_back(cur);
        cur.pop_back();
        return;
      }
      for (std::size_t v = 0; v <= left; ++v) {
        cur.push_back(v);
        self(self, left - v);
        cur.pop_back();
      }
    };
    if (n > 0) rec(rec, j);
    return out;
  };

  auto rec = run_instances(2, tuples.size(), [&](std::size_t i, Recorder& r) {
    const auto& xs = tuples[i];
    const std::span<const Object> sx(xs);
    const auto fx = F.map_objects(sx);
    const std::span<const typename D::Object> sfx(fx);
    const auto j = xs.size();
    const auto xi_j = xi_tower(F, sx);
    if (j >= 1)
      for (std::size_t q = 0; q <= j; ++q) {
        const std::vector<std::size_t> split{q, j - q};
        r.check_equal(0, [&] {
          const auto lhs = d.compose(F.mor(phi_split(c, std::span(split), sx)), xi_j);
          const auto head = sx.first(q), tail = sx.subspan(q);
          const auto rhs = d.compose(F.xi(left_nested(c, head), left_nested(c, tail)),
                                     d.compose(d.tensor(xi_tower(F, head), xi_tower(F, tail)),
                                               phi_split(d, std::span(split), sfx)));
          return std::pair{lhs, rhs};
        }, [&] { return json{{"functor", F.name}, {"objects", xs}, {"q", q}}; });
      }
    for (std::size_t n = 1; n <= max_n; ++n)
      for (const auto& sizes : compositions(j, n)) {
        r.check_equal(1, [&] {
          const auto lhs = d.compose(F.mor(phi_split(c, std::span(sizes), sx)), xi_j);
          std::vector<Object> bars;
          std::vector<DMor> towers;
          std::size_t at = 0;
          for (auto s : sizes) {
            const auto block = sx.subspan(at, s);
            bars.push_back(left_nested(c, block));
            towers.push_back(xi_tower(F, block));
            at += s;
          }
          const auto rhs = d.compose(xi_tower(F, std::span<const Object>(bars)),
                                     d.compose(eval_obj_mor(d, default_kappa(n), std::span<const DMor>(towers)),
                                               phi_split(d, std::span(sizes), sfx)));
          return std::pair{lhs, rhs};
        }, [&] { return json{{"functor", F.name}, {"objects", xs}, {"sizes", sizes}}; });
      }
  }, ex);
  auto report = make_report("xi_lemmas:" + F.name, xi_lemma_names(), std::move(rec));
  report.parameters = json{{"objects", objects.size()}, {"max_j", max_j}, {"max_n", max_n}};
  return report;
}

}  // namespace opal
