#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "opal/lax.hpp"

namespace opal {

/// A morphism x⃗ → y⃗ of L M: a function f: {1,…,j} → {1,…,n} (as 1-based
/// images) and, for each s, a multimorphism φ_s: ⟨x_r⟩_{f(r)=s} → y_s whose
/// source lists the fibre in increasing r.  Source and target are recovered
/// from the components.
template <class Arrow>
struct LMorphism {
  std::vector<int> f;
  std::vector<Arrow> components;

  friend bool operator==(const LMorphism&, const LMorphism&) = default;
};

template <class Arrow>
void to_json(json& j, const LMorphism<Arrow>& m) {
  j = json{{"f", m.f}, {"components", m.components}};
}

/// The indices r (0-based) with f(r) = s (1-based), increasing.
inline std::vector<std::size_t> fibre(const std::vector<int>& f, int s) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < f.size(); ++r)
    if (f[r] == s) out.push_back(r);
  return out;
}

/// σ_f: the permutation with act_inverse(σ_f, x⃗) = ⊙_s ⟨x_r⟩_{f(r)=s}, the
/// stable sort of positions by f-value.
inline Permutation fibre_sort(const std::vector<int>& f, std::size_t n) {
  std::vector<int> images;
  for (std::size_t s = 1; s <= n; ++s)
    for (auto r : fibre(f, static_cast<int>(s))) images.push_back(static_cast<int>(r + 1));
  if (images.size() != f.size()) throw StructuralError("function value out of range");
  return Permutation(images);
}

/// The free permutative category L M on a multicategory: objects are lists
/// of objects of M, tensor is concatenation with the empty list as unit, α
/// and the unitors are identities and the braiding moves blocks.
template <Multicategory M>
class FreePermutative {
public:
  using Base = M;
  using Element = typename M::Object;
  using Object = std::vector<Element>;
  using Arrow = typename M::Arrow;
  using Morphism = LMorphism<Arrow>;

  explicit FreePermutative(const M& m) : m_(&m) {}
  const M& base() const noexcept { return *m_; }

  Object unit() const { return {}; }
  Object tensor(const Object& a, const Object& b) const {
    Object out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
  }
  Morphism tensor(const Morphism& f, const Morphism& g) const {
    Morphism out = f;
    const auto shift = static_cast<int>(f.components.size());
    for (int v : g.f) out.f.push_back(v + shift);
    out.components.insert(out.components.end(), g.components.begin(), g.components.end());
    return out;
  }

  Morphism id(const Object& a) const {
    Morphism out;
    for (std::size_t r = 0; r < a.size(); ++r) {
      out.f.push_back(static_cast<int>(r + 1));
      out.components.push_back(m_->identity(a[r]));
    }
    return out;
  }

  Object source(const Morphism& f) const {
    Object out;
    out.reserve(f.f.size());
    std::vector<std::size_t> used(f.components.size(), 0);
    for (int v : f.f) {
      if (v < 1 || static_cast<std::size_t>(v) > f.components.size())
        throw StructuralError("L-morphism: function value out of range");
      const auto s = static_cast<std::size_t>(v - 1);
      if (used[s] >= f.components[s].arity()) throw StructuralError("L-morphism: fibre longer than its component");
      out.push_back(f.components[s].source[used[s]++]);
    }
    for (std::size_t s = 0; s < used.size(); ++s)
      if (used[s] != f.components[s].arity()) throw StructuralError("L-morphism: fibre shorter than its component");
    return out;
  }
  Object target(const Morphism& f) const {
    Object out;
    for (const auto& c : f.components) out.push_back(c.target);
    return out;
  }

  /// Checks that the fibres of f match the component sources.
  Morphism make(std::vector<int> f, std::vector<Arrow> components) const {
    Morphism out{std::move(f), std::move(components)};
    source(out);
    return out;
  }

  /// (g,⟨ψ_t⟩)∘(f,⟨φ_s⟩) = (g∘f, ⟨χ_t⟩) with χ_t = Γ(ψ_t; ⟨φ_s⟩_{g(s)=t})
  /// acted on by the permutation taking the chunked source back to
  /// increasing order.
  Morphism compose(const Morphism& g, const Morphism& f) const {
    if (target(f) != source(g)) throw StructuralError("L compose: target of the first is not the source of the second");
    Morphism out;
    for (int v : f.f) out.f.push_back(g.f[static_cast<std::size_t>(v - 1)]);
    for (std::size_t t = 1; t <= g.components.size(); ++t) {
      std::vector<Arrow> inner;
      std::vector<std::size_t> chunked;
      for (auto s : fibre(g.f, static_cast<int>(t))) {
        inner.push_back(f.components[s]);
        for (auto r : fibre(f.f, static_cast<int>(s + 1))) chunked.push_back(r);
      }
      auto sorted = chunked;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> rho;
      for (auto r : sorted)
        rho.push_back(static_cast<int>(std::find(chunked.begin(), chunked.end(), r) - chunked.begin() + 1));
      const auto gamma = m_->gamma(g.components[t - 1], std::span<const Arrow>(inner));
      out.components.push_back(m_->sigma_star(gamma, Permutation(rho)));
    }
    return out;
  }

  Morphism associator(const Object& a, const Object& b, const Object& c) const { return id(tensor(tensor(a, b), c)); }
  Morphism associator_inverse(const Object& a, const Object& b, const Object& c) const {
    return id(tensor(tensor(a, b), c));
  }
  Morphism right_unitor(const Object& a) const { return id(a); }
  Morphism right_unitor_inverse(const Object& a) const { return id(a); }

  /// a⊙b → b⊙a: entry r of a goes to |b|+r, entry r of b goes to r.
  Morphism braiding(const Object& a, const Object& b) const {
    Morphism out;
    const auto j = a.size(), n = b.size();
    for (std::size_t r = 0; r < j; ++r) out.f.push_back(static_cast<int>(n + r + 1));
    for (std::size_t r = 0; r < n; ++r) out.f.push_back(static_cast<int>(r + 1));
    for (const auto& y : b) out.components.push_back(m_->identity(y));
    for (const auto& x : a) out.components.push_back(m_->identity(x));
    return out;
  }

  /// Every (f, ⟨φ_s⟩): functions in lexicographic order, then components in
  /// the order M lists them.
  std::vector<Morphism> hom(const Object& a, const Object& b) const {
    std::vector<Morphism> out;
    const auto j = a.size(), n = b.size();
    if (n == 0 && j > 0) return out;
    std::vector<int> f(j, 1);
    while (true) {
      std::vector<std::vector<Arrow>> options;
      bool empty = false;
      for (std::size_t s = 1; s <= n && !empty; ++s) {
        Object src;
        for (auto r : fibre(f, static_cast<int>(s))) src.push_back(a[r]);
        options.push_back(m_->hom(std::span<const Element>(src), b[s - 1]));
        empty = options.back().empty();
      }
      if (!empty) {
        std::vector<std::size_t> pick(n, 0);
        while (true) {
          Morphism m{f, {}};
          for (std::size_t s = 0; s < n; ++s) m.components.push_back(options[s][pick[s]]);
          out.push_back(std::move(m));
          std::size_t s = n;
          while (s > 0 && ++pick[s - 1] == options[s - 1].size()) pick[--s] = 0;
          if (s == 0) break;
        }
      }
      std::size_t r = j;
      while (r > 0 && f[r - 1] == static_cast<int>(n)) f[--r] = 1;
      if (r == 0) break;
      ++f[r - 1];
    }
    return out;
  }

private:
  const M* m_;
};

/// L of a multifunctor: the strict monoidal functor (f,⟨φ_s⟩) ↦ (f,⟨Fφ_s⟩).
template <Multicategory M, Multicategory N>
LaxFunctor<FreePermutative<M>, FreePermutative<N>> free_functor(const Multifunctor<M, N>& Fh,
                                                                const FreePermutative<M>& lm,
                                                                const FreePermutative<N>& ln) {
  using LM = FreePermutative<M>;
  auto obj = [Fh](const typename LM::Object& xs) {
    typename FreePermutative<N>::Object out;
    for (const auto& x : xs) out.push_back(Fh.obj(x));
    return out;
  };
  return {"L(" + Fh.name + ")",
          &lm,
          &ln,
          obj,
          [Fh](const typename LM::Morphism& m) {
            typename FreePermutative<N>::Morphism out{m.f, {}};
            for (const auto& c : m.components) out.components.push_back(Fh.arrow(c));
            return out;
          },
          ln.id({}),
          [&ln, &lm, obj](const typename LM::Object& a, const typename LM::Object& b) { return ln.id(obj(lm.tensor(a, b))); }};
}

/// The unit η: M → U(L M): x ↦ (x) and φ ↦ (the map to {1}, {φ}).  U(L M)
/// must use the left-nested κ, so that κ̄ of a tuple of lists is their
/// concatenation.
template <Multicategory M>
Multifunctor<M, Underlying<FreePermutative<M>>> unit_multifunctor(const Underlying<FreePermutative<M>>& ulm) {
  using LM = FreePermutative<M>;
  return {"η", [](const typename M::Object& x) { return typename LM::Object{x}; },
          [&ulm](const typename M::Arrow& phi) {
            std::vector<typename LM::Object> source;
            for (const auto& x : phi.source) source.push_back({x});
            typename LM::Morphism payload{std::vector<int>(phi.arity(), 1), {phi}};
            return ulm.make(std::move(source), {phi.target}, std::move(payload));
          }};
}

/// The counit ε: L(U C) → C for the left-nested κ: x⃗ ↦ κ̄x⃗, and (f,⟨φ_s⟩)
/// ↦ κ_n⟨φ_s⟩ ∘ φ(κ_j → γ(κ_n;κ_{j_s})) ∘ (κ_j → κ_j·σ_f).  ε is strictly
/// unital; its ξ is the canonical γ(m;κ_j,κ_n) → κ_{j+n}.
template <SymmetricMonoidal C>
LaxFunctor<FreePermutative<Underlying<C>>, C> counit(const Underlying<C>& uc, const FreePermutative<Underlying<C>>& luc,
                                                     const Faults& faults = {}) {
  using LUC = FreePermutative<Underlying<C>>;
  using Object = typename C::Object;
  const C& c = uc.category();
  auto obj = [&c](const typename LUC::Object& ys) { return left_nested(c, std::span<const Object>(ys)); };
  return {"ε",
          &luc,
          &c,
          obj,
          [&c, &luc, faults](const typename LUC::Morphism& m) {
            const auto xs = luc.source(m);
            const auto n = m.components.size();
            const auto rho = fibre_sort(m.f, n);
            const auto chunked = act_inverse(rho, xs);
            const std::span<const Object> sc(chunked);
            std::vector<YObject> parts;
            std::vector<typename C::Morphism> payloads;
            for (const auto& phi : m.components) {
              parts.push_back(default_kappa(phi.arity()));
              payloads.push_back(phi.payload);
            }
            const auto& kj = default_kappa(xs.size());
            const auto sorted = faults.drop_sigma_f ? kj : act_y(kj, rho);
            const auto reorder = eval_can_iso(c, sorted, kj, sc);
            const auto regroup = eval_can_iso(c, kj, gamma_y(default_kappa(n), parts), sc);
            const auto body = eval_obj_mor(c, default_kappa(n), std::span<const typename C::Morphism>(payloads));
            return c.compose(body, c.compose(regroup, reorder));
          },
          c.id(c.unit()),
          [&c](const typename LUC::Object& a, const typename LUC::Object& b) {
            const auto& g = generators();
            std::vector<Object> ab = a;
            ab.insert(ab.end(), b.begin(), b.end());
            return eval_can_iso(c, gamma_y(g.m, {default_kappa(a.size()), default_kappa(b.size())}),
                                default_kappa(ab.size()), std::span<const Object>(ab));
          }};
}

/// ν_x⃗: x⃗ → (κ̄x⃗) in L(U C): the map to {1} with the identity of κ̄x⃗.
template <SymmetricMonoidal C>
typename FreePermutative<Underlying<C>>::Morphism nu(const Underlying<C>& uc,
                                                     const typename FreePermutative<Underlying<C>>::Object& xs) {
  const C& c = uc.category();
  const auto bar = left_nested(c, std::span<const typename C::Object>(xs));
  return {std::vector<int>(xs.size(), 1), {uc.make(xs, bar, c.id(bar))}};
}

}  // namespace opal
