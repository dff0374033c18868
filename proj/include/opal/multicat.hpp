#pragma once

#include <concepts>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "opal/faults.hpp"
#include "opal/json_io.hpp"
#include "opal/memo.hpp"
#include "opal/smc.hpp"

namespace opal {

/// A multimorphism x⃗ → y.  The source tuple is part of the value: two arrows
/// with equal payloads but different sources are different arrows.
template <class Object, class Payload>
struct MultiArrow {
  std::vector<Object> source;
  Object target;
  Payload payload;

  std::size_t arity() const noexcept { return source.size(); }
  friend bool operator==(const MultiArrow&, const MultiArrow&) = default;
};

template <class Object, class Payload>
void to_json(json& j, const MultiArrow<Object, Payload>& f) {
  j = json{{"source", f.source}, {"target", f.target}, {"payload", f.payload}};
}

/// The operations every multicategory in this library provides.
template <class M>
concept Multicategory = requires(const M& m, const typename M::Object& a, const typename M::Arrow& f,
                                 const Permutation& s, std::span<const typename M::Arrow> fs,
                                 std::span<const typename M::Object> xs) {
  typename M::Object;
  typename M::Arrow;
  { m.identity(a) } -> std::same_as<typename M::Arrow>;
  { m.sigma_star(f, s) } -> std::same_as<typename M::Arrow>;
  { m.gamma(f, fs) } -> std::same_as<typename M::Arrow>;
  { m.hom(xs, a) } -> std::same_as<std::vector<typename M::Arrow>>;
};

/// U_κC: the multicategory with the objects of C and arrows x⃗ → y the
/// morphisms κ̄x⃗ → y of C, where κ̄x⃗ is κ(x⃗) evaluated at x⃗.
///
/// When objects are hashable the structure maps (κ, κ̄, ω, θ, φ) are
/// memoised per instance; copies share the memo.
template <SymmetricMonoidal C>
class Underlying {
public:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;
  using Arrow = MultiArrow<Object, Morphism>;

  Underlying(const C& c, KappaFamily<Object> kappa, Faults faults = {})
      : c_(&c), kappa_(std::move(kappa)), faults_(faults), memo_(std::make_shared<Memos>()) {}

  const C& category() const noexcept { return *c_; }
  const Faults& faults() const noexcept { return faults_; }

  YObject kappa(std::span<const Object> xs) const { return kappa_data(xs).first; }
  /// κ̄x⃗ = κ(x⃗)(x⃗).
  Object kappa_bar(std::span<const Object> xs) const { return kappa_data(xs).second; }

  /// Wraps a payload, checking that it starts at κ̄(source) and ends at target.
  Arrow make(std::vector<Object> source, Object target, Morphism payload) const {
    if (!(c_->source(payload) == kappa_bar(source)) || !(c_->target(payload) == target))
      throw StructuralError("multi-arrow payload does not run from κ̄(source) to the target");
    return Arrow{std::move(source), std::move(target), std::move(payload)};
  }

  /// The identity of a: the canonical map ω(a): κ̄(a) → a induced by κ_1(a) → 1.
  Arrow identity(const Object& a) const {
    std::vector<Object> xs{a};
    auto omega = memoised(&Memos::omega, xs, [&] {
      return eval_can_iso(*c_, kappa(xs), generators().one, std::span<const Object>(xs));
    });
    return Arrow{std::move(xs), a, std::move(omega)};
  }

  /// f·σ: source σ⁻¹x⃗, payload f∘θ(x⃗,σ) with θ the canonical map
  /// κ̄(σ⁻¹x⃗) → (κ(x⃗)·σ)(σ⁻¹x⃗) = κ̄x⃗.
  Arrow sigma_star(const Arrow& f, const Permutation& s) const {
    auto moved = act_inverse(s, f.source);
    auto theta = memoised(&Memos::theta, std::pair{f.source, s}, [&] {
      const std::span<const Object> mv(moved);
      return eval_can_iso(*c_, kappa(mv), act_y(kappa(f.source), s), mv);
    });
    return Arrow{std::move(moved), f.target, c_->compose(f.payload, theta)};
  }

  /// Γ(f; g_1,…,g_n) = f ∘ κ(y⃗)(g_1,…,g_n) ∘ φ(y⃗, ⟨x⃗_s⟩), where φ is the
  /// canonical map κ̄(⊙x⃗_s) → γ(κ(y⃗); κ(x⃗_1),…,κ(x⃗_n))(⊙x⃗_s).
  Arrow gamma(const Arrow& f, std::span<const Arrow> gs) const {
    if (gs.size() != f.arity())
      throw StructuralError("Γ: " + std::to_string(gs.size()) + " inner arrows for arity " + std::to_string(f.arity()));
    std::vector<Object> joined;
    std::vector<std::vector<Object>> blocks;
    std::vector<Morphism> payloads;
    for (std::size_t s = 0; s < gs.size(); ++s) {
      if (!(gs[s].target == f.source[s])) throw StructuralError("Γ: inner target does not match outer source");
      joined.insert(joined.end(), gs[s].source.begin(), gs[s].source.end());
      blocks.push_back(gs[s].source);
      payloads.push_back(gs[s].payload);
    }
    const auto outer_kappa = kappa(f.source);
    auto body = c_->compose(f.payload, eval_obj_mor(*c_, outer_kappa, std::span<const Morphism>(payloads)));
    if (!faults_.drop_phi) {
      auto phi = memoised(&Memos::phi, std::pair{f.source, blocks}, [&] {
        std::vector<YObject> inner_kappas;
        for (const auto& b : blocks) inner_kappas.push_back(kappa(b));
        const std::span<const Object> jx(joined);
        return eval_can_iso(*c_, kappa(jx), gamma_y(outer_kappa, inner_kappas, faults_), jx);
      });
      body = c_->compose(body, phi);
    }
    return Arrow{std::move(joined), f.target, std::move(body)};
  }
  Arrow gamma(const Arrow& f, const std::vector<Arrow>& gs) const { return gamma(f, std::span<const Arrow>(gs)); }

  std::vector<Arrow> hom(std::span<const Object> xs, const Object& y) const
    requires EnumerableCategory<C>
  {
    std::vector<Arrow> out;
    const std::vector<Object> source(xs.begin(), xs.end());
    for (auto& p : c_->hom(kappa_bar(xs), y)) out.push_back(Arrow{source, y, std::move(p)});
    return out;
  }

private:
  using Tuple = std::vector<Object>;
  struct TupleHash {
    std::size_t operator()(const Tuple& t) const noexcept {
      if constexpr (Hashable<Object>) return hash_range(t);
      else return t.size();
    }
  };
  struct ThetaHash {
    std::size_t operator()(const std::pair<Tuple, Permutation>& k) const noexcept {
      return hash_mix(TupleHash{}(k.first), std::hash<Permutation>{}(k.second));
    }
  };
  struct PhiHash {
    std::size_t operator()(const std::pair<Tuple, std::vector<Tuple>>& k) const noexcept {
      std::size_t h = TupleHash{}(k.first);
      for (const auto& b : k.second) h = hash_mix(h, TupleHash{}(b));
      return h;
    }
  };
  struct Memos {
    Memo<Tuple, std::pair<YObject, Object>, TupleHash> kappa;
    Memo<Tuple, Morphism, TupleHash> omega;
    Memo<std::pair<Tuple, Permutation>, Morphism, ThetaHash> theta;
    Memo<std::pair<Tuple, std::vector<Tuple>>, Morphism, PhiHash> phi;
  };

  template <class Table, class Key, class Compute>
  auto memoised(Table Memos::*table, const Key& key, Compute&& compute) const {
    if constexpr (Hashable<Object>) return ((*memo_).*table).get(key, compute);
    else return compute();
  }

  std::pair<YObject, Object> kappa_data(std::span<const Object> xs) const {
    return memoised(&Memos::kappa, Tuple(xs.begin(), xs.end()), [&] {
      auto y = kappa_(xs);
      if (y.arity() != xs.size())
        throw StructuralError("κ returned arity " + std::to_string(y.arity()) + " for a tuple of length " +
                              std::to_string(xs.size()));
      auto bar = eval_obj(*c_, y, xs);
      return std::pair{std::move(y), std::move(bar)};
    });
  }

  const C* c_;
  KappaFamily<Object> kappa_;
  Faults faults_;
  std::shared_ptr<Memos> memo_;
};

/// The comparison U_κC → U_λC: identity on objects, and an arrow's payload is
/// precomposed with the canonical map λ̄x⃗ → κ̄x⃗.
template <SymmetricMonoidal C>
typename Underlying<C>::Arrow canonical_iso(const Underlying<C>& from, const Underlying<C>& to,
                                            const typename Underlying<C>::Arrow& f) {
  using Object = typename C::Object;
  const std::span<const Object> xs(f.source);
  const auto& c = from.category();
  return {f.source, f.target, c.compose(f.payload, eval_can_iso(c, to.kappa(xs), from.kappa(xs), xs))};
}

}  // namespace opal
