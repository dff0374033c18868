#include <random>

#include "doctest.h"
#include "opal/h_category.hpp"
#include "opal/iso_suite.hpp"
#include "opal/multicat.hpp"
#include "opal/multicat_laws.hpp"
#include "oracle.hpp"

using opal::HCategory;
using opal::HMorphism;
using opal::Paren;
using opal::Permutation;
using opal::ZObject;
using U = opal::Underlying<HCategory>;
using Arrow = U::Arrow;

static_assert(opal::Multicategory<U>);

namespace {

const HCategory H;
const ZObject a(Paren::leaf(), {1});
const ZObject e;
const ZObject b(Paren::node(Paren::leaf(), Paren::leaf()), {1, 2});
const ZObject c(Paren::node(Paren::leaf(), Paren::leaf()), {2});

std::vector<ZObject> tuple(std::initializer_list<ZObject> xs) { return xs; }

}  // namespace

TEST_CASE("default κ: unary and nullary hom-sets are those of H") {
  const U u(H, opal::default_kappa_family<ZObject>());
  for (const auto& x : HCategory::objects_up_to_width(3))
    for (const auto& y : HCategory::objects_up_to_width(3)) {
      const auto xs = tuple({x});
      const auto arrows = u.hom(std::span<const ZObject>(xs), y);
      const auto plain = H.hom(x, y);
      REQUIRE(arrows.size() == plain.size());
      for (std::size_t i = 0; i < arrows.size(); ++i) REQUIRE(arrows[i].payload == plain[i]);
    }
  const auto nullary = u.hom(std::span<const ZObject>{}, e);
  REQUIRE(nullary.size() == 1);
  CHECK(nullary[0].payload == H.id(e));
  CHECK(u.hom(std::span<const ZObject>{}, a).empty());
}

TEST_CASE("the source tuple is part of an arrow") {
  const U u(H, opal::default_kappa_family<ZObject>());
  const auto ab = H.tensor(a, b);
  const auto id2 = u.make(tuple({a, b}), ab, H.id(ab));
  const auto id1 = u.identity(ab);
  CHECK(id1.payload == id2.payload);
  CHECK(id1 != id2);
  CHECK_THROWS_AS(u.make(tuple({b, a}), ab, H.id(ab)), opal::StructuralError);
}

TEST_CASE("Γ(id²_{a⊕e}; id¹_a, id⁰_e) is the inverse unitor") {
  const U u(H, opal::default_kappa_family<ZObject>());
  for (const auto& x : {a, b, c}) {
    const auto xe = H.tensor(x, e);
    const auto id2 = u.make(tuple({x, e}), xe, H.id(xe));
    const auto id0 = u.make({}, e, H.id(e));
    const auto composite = u.gamma(id2, {u.identity(x), id0});
    CHECK(composite.source == tuple({x}));
    CHECK(composite.target == xe);
    CHECK(composite.payload == H.right_unitor_inverse(x));
  }
}

TEST_CASE("identities") {
  const U plain(H, opal::default_kappa_family<ZObject>());
  const U exotic(H, opal::exotic_kappa_family());
  for (const auto& x : HCategory::objects_up_to_width(3)) {
    CHECK(plain.identity(x).payload == H.id(x));
    // κ_1(x) in the exotic family puts x after an extra unit, so ω(x) is a
    // genuine structure map; in H it is still the identity permutation.
    const auto w = exotic.identity(x);
    const auto xs = tuple({x});
    CHECK(w.payload.source == exotic.kappa_bar(std::span<const ZObject>(xs)));
    CHECK(w.payload.source != x);
    CHECK(w.payload.perm.is_identity());
  }
}

TEST_CASE("σ* moves the source and is a right action") {
  const U u(H, opal::exotic_kappa_family());
  const auto xs = tuple({a, b, c});
  const auto y = H.tensor(H.tensor(b, a), c);
  for (const auto& f : u.hom(std::span<const ZObject>(xs), y)) {
    for (const auto& s : Permutation::all(3)) {
      const auto fs = u.sigma_star(f, s);
      REQUIRE(fs.source == opal::act_inverse(s, xs));
      for (const auto& t : Permutation::all(3)) REQUIRE(u.sigma_star(fs, t) == u.sigma_star(f, opal::compose(s, t)));
    }
  }
}

TEST_CASE("Γ agrees with generator tracking, and associates") {
  for (int family = 0; family < 3; ++family) {
    auto kappa = family == 0   ? opal::default_kappa_family<ZObject>()
                 : family == 1 ? opal::exotic_kappa_family()
                               : opal::right_nested_kappa_family<ZObject>();
    const U u(H, kappa);
    auto kap = [&](const std::vector<ZObject>& xs) { return kappa(std::span<const ZObject>(xs)); };
    const auto gens = HCategory::objects_up_to_width(2);
    opal::ArrowTable<U> table(u, gens, 3);
    std::mt19937_64 rng(17 + static_cast<unsigned>(family));
    auto pick = [&](const std::vector<Arrow>& pool) {
      return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    };
    auto gamma_oracle = [&](const Arrow& f, const std::vector<Arrow>& gs) {
      std::vector<Permutation> perms;
      std::vector<std::vector<ZObject>> blocks;
      for (const auto& g : gs) {
        perms.push_back(g.payload.perm);
        blocks.push_back(g.source);
      }
      return oracle::h_gamma_perm(kap, f.payload.perm, f.source, perms, blocks);
    };
    int checked = 0;
    while (checked < 150) {
      const auto f = pick(table.all());
      std::vector<Arrow> gs, hs;
      bool ok = true;
      for (const auto& y : f.source) {
        const auto& into = table.into(y);
        if (into.empty()) ok = false;
        else gs.push_back(pick(into));
      }
      if (!ok) continue;
      const auto fg = u.gamma(f, gs);
      REQUIRE(fg.payload.perm == gamma_oracle(f, gs));
      for (const auto& x : fg.source) {
        const auto& into = table.into(x);
        if (into.empty() || hs.size() > 4) ok = false;
        else hs.push_back(pick(into));
      }
      if (!ok) continue;
      std::vector<Arrow> regrouped;
      std::size_t next = 0;
      for (const auto& g : gs) {
        std::vector<Arrow> block(hs.begin() + static_cast<long>(next), hs.begin() + static_cast<long>(next + g.arity()));
        next += g.arity();
        regrouped.push_back(u.gamma(g, block));
      }
      REQUIRE(u.gamma(fg, hs) == u.gamma(f, regrouped));
      ++checked;
    }
  }
}

TEST_CASE("the comparison isomorphisms") {
  const U plain(H, opal::default_kappa_family<ZObject>());
  const U exotic(H, opal::exotic_kappa_family());
  const U right(H, opal::right_nested_kappa_family<ZObject>());
  const auto xs = tuple({b, a, c});
  const auto y = H.tensor(b, H.tensor(a, c));
  for (const auto& f : exotic.hom(std::span<const ZObject>(xs), y)) {
    CHECK(opal::canonical_iso(exotic, exotic, f) == f);
    const auto g = opal::canonical_iso(exotic, plain, f);
    CHECK(g.source == f.source);
    CHECK(opal::canonical_iso(plain, exotic, g) == f);
    CHECK(opal::canonical_iso(plain, right, g) == opal::canonical_iso(exotic, right, f));
  }
}

TEST_CASE("κ-comparison suite passes on three families") {
  std::vector<std::pair<std::string, U>> families{
      {"default", U(H, opal::default_kappa_family<ZObject>())},
      {"exotic", U(H, opal::exotic_kappa_family())},
      {"right_nested", U(H, opal::right_nested_kappa_family<ZObject>())}};
  const auto report = opal::kappa_iso_suite("iso", families, HCategory::objects_up_to_width(2), 2,
                                            opal::Execution::parallel);
  CHECK(report.passed());
  for (const auto& law : report.laws) CHECK_MESSAGE(law.tally.checked > 0, law.name);
}

TEST_CASE("dropping φ is caught by the multicategory laws") {
  opal::Faults faults;
  faults.drop_phi = true;
  const U broken(H, opal::exotic_kappa_family(), faults);
  const auto report = opal::multicat_law_suite("broken", broken, HCategory::objects_up_to_width(2),
                                               opal::MulticatBounds{3, 0, 0}, opal::Execution::parallel);
  CHECK_FALSE(report.passed());
  const auto j = report.to_json();
  bool has_counterexample = false;
  for (const auto& [_, law] : j["laws"].items()) has_counterexample |= law.contains("counterexample");
  CHECK(has_counterexample);
}
