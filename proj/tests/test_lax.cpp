#include "doctest.h"
#include "opal/h_functors.hpp"

using opal::HCategory;
using opal::HFunctor;
using opal::HMorphism;
using opal::Paren;
using opal::Permutation;
using opal::ZObject;
using U = opal::Underlying<HCategory>;

namespace {

const HCategory H;
const ZObject e;
const ZObject a(Paren::leaf(), {1});
const ZObject b(Paren::node(Paren::leaf(), Paren::leaf()), {1, 2});
const ZObject c(Paren::node(Paren::leaf(), Paren::leaf()), {2});
// Three leaves with the middle one unmarked: substituting it doubles arity.
const ZObject w(Paren::node(Paren::leaf(), Paren::node(Paren::leaf(), Paren::leaf())), {1, 3});

std::vector<HFunctor> coherent_functors() {
  return {opal::identity_lax(H), opal::substitution_functor(H, w), opal::pad_functor(H), opal::mirror_functor(H)};
}

// The identity functor with ξ(a,b) reversing all generators of a⊕b: a
// well-typed but incoherent choice of structure maps.
HFunctor twisted_identity() {
  auto F = opal::identity_lax(H);
  F.name = "twisted";
  F.xi = [](const ZObject& x, const ZObject& y) {
    const auto xy = H.tensor(x, y);
    std::vector<int> images(xy.arity());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = static_cast<int>(images.size() - i);
    return HMorphism{xy, xy, Permutation(images)};
  };
  return F;
}

}  // namespace

TEST_CASE("mirror reflects trees and marks") {
  const ZObject z(Paren::node(Paren::leaf(), Paren::node(Paren::leaf(), Paren::leaf())), {1, 2});
  const auto m = opal::mirror(z);
  CHECK(m.tree() == Paren::node(Paren::node(Paren::leaf(), Paren::leaf()), Paren::leaf()));
  CHECK(m.marks().elements() == std::vector<int>{2, 3});
  CHECK(opal::mirror(m) == z);
}

TEST_CASE("the test functors are coherent") {
  const auto objects = HCategory::objects_up_to_width(2);
  for (const auto& F : coherent_functors()) {
    const auto report = opal::lax_coherence_suite(F, objects, opal::Execution::parallel);
    CHECK_MESSAGE(report.passed(), F.name);
    for (const auto& law : report.laws) CHECK_MESSAGE(law.tally.checked > 0, F.name, law.name);
  }
}

TEST_CASE("pad is strong but not strict") {
  const auto F = opal::pad_functor(H);
  CHECK(F.eta != H.id(H.unit()));
  CHECK(H.source(F.eta) == e);
  CHECK(H.target(F.eta) == H.tensor(e, e));
  CHECK(F.xi(a, b) != H.id(H.source(F.xi(a, b))));
}

TEST_CASE("an incoherent functor is rejected") {
  const auto objects = HCategory::objects_up_to_width(2);
  const U u(H, opal::default_kappa_family<ZObject>());
  const auto report = opal::lax_coherence_suite(twisted_identity(), objects, opal::Execution::serial);
  CHECK_FALSE(report.passed());
  CHECK_THROWS_AS(opal::lax_to_multifunctor(twisted_identity(), u, u, objects), opal::StructuralError);
  CHECK_NOTHROW(opal::lax_to_multifunctor(twisted_identity(), u, u, objects, false));
}

TEST_CASE("ξ-tower at small n") {
  for (const auto& F : coherent_functors()) {
    CHECK(opal::xi_tower(F, std::span<const ZObject>{}) == F.eta);
    const std::vector<ZObject> one{b};
    CHECK(opal::xi_tower(F, std::span<const ZObject>(one)) == H.id(F.obj(b)));
    const std::vector<ZObject> two{a, c};
    CHECK(opal::xi_tower(F, std::span<const ZObject>(two)) == F.xi(a, c));
  }
}

TEST_CASE("ξ_3 of a strict functor is the identity, of mirror a block reversal") {
  const std::vector<ZObject> xs{b, a, c};
  const std::span<const ZObject> sx(xs);
  const auto subst = opal::substitution_functor(H, w);
  const auto s3 = opal::xi_tower(subst, sx);
  CHECK(s3.source == s3.target);
  CHECK(s3.perm.is_identity());

  // κ̄M(a,b,c) = (Ma⊕Mb)⊕Mc and M((a⊕b)⊕c) = Mc⊕(Mb⊕Ma): the three blocks of
  // generators come out in reverse order, each block kept intact.
  const auto m3 = opal::xi_tower(opal::mirror_functor(H), sx);
  const std::vector<std::size_t> sizes{b.arity(), a.arity(), c.arity()};
  CHECK(m3.perm == opal::block_perm(Permutation({3, 2, 1}), std::span<const std::size_t>(sizes)));
}

TEST_CASE("U of a functor: F_1 is F and F_0 precomposes with η") {
  const U u(H, opal::default_kappa_family<ZObject>());
  const auto objects = HCategory::objects_up_to_width(2);
  for (const auto& F : coherent_functors()) {
    const auto Fh = opal::lax_to_multifunctor(F, u, u, objects);
    for (const auto& x : objects)
      for (const auto& y : objects)
        for (const auto& f : H.hom(x, y)) CHECK(Fh.arrow(u.make({x}, y, f)).payload == F.mor(f));
    const auto nullary = Fh.arrow(u.make({}, e, H.id(e)));
    CHECK(nullary.payload == H.compose(F.mor(H.id(e)), F.eta));
  }
}

TEST_CASE("a strict functor gives the plain payload map") {
  const U u(H, opal::default_kappa_family<ZObject>());
  const auto subst = opal::substitution_functor(H, w);
  const auto Fh = opal::lax_to_multifunctor(subst, u, u, HCategory::objects_up_to_width(2));
  opal::ArrowTable<U> table(u, HCategory::objects_up_to_width(2), 3);
  for (const auto& phi : table.all()) {
    const auto mapped = Fh.arrow(phi);
    CHECK(mapped.source == subst.map_objects(std::span<const ZObject>(phi.source)));
    CHECK(mapped.payload == subst.mor(phi.payload));
  }
}

TEST_CASE("identity multifunctor ↔ identity lax functor") {
  const U u(H, opal::default_kappa_family<ZObject>());
  const opal::Multifunctor<U, U> id{"id", [](const ZObject& x) { return x; }, [](const U::Arrow& f) { return f; }};
  const auto F = opal::multifunctor_to_lax(id, u, u);
  CHECK(F.eta == H.id(e));
  for (const auto& x : HCategory::objects_up_to_width(2))
    for (const auto& y : HCategory::objects_up_to_width(2)) CHECK(F.xi(x, y) == H.id(H.tensor(x, y)));
}

TEST_CASE("round trips, ξ lemmas and multifunctor laws") {
  const U u(H, opal::default_kappa_family<ZObject>());
  const auto objects = HCategory::objects_up_to_width(2);
  auto functors = coherent_functors();
  functors.push_back(opal::compose_lax(functors[3], functors[2]));
  for (const auto& F : functors) {
    const auto trip = opal::round_trip_suite(F, u, objects, 3, opal::Execution::parallel);
    CHECK_MESSAGE(trip.passed(), F.name);
    const auto lemmas = opal::xi_lemma_suite(F, HCategory::objects_up_to_width(1), 4, 3, opal::Execution::parallel);
    CHECK_MESSAGE(lemmas.passed(), F.name);
    for (const auto& law : lemmas.laws) CHECK(law.tally.checked > 0);
    const auto Fh = opal::lax_to_multifunctor(F, u, u, objects);
    CHECK_MESSAGE(opal::multifunctor_suite(Fh, u, u, objects, 3, opal::Execution::parallel).passed(), F.name);
  }
}

TEST_CASE("the ξ lemmas catch an incoherent ξ") {
  const auto lemmas =
      opal::xi_lemma_suite(twisted_identity(), HCategory::objects_up_to_width(1), 4, 3, opal::Execution::serial);
  CHECK_FALSE(lemmas.passed());
}
