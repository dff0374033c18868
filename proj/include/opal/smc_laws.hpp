#pragma once

#include <functional>
#include <string>
#include <vector>

#include "opal/laws.hpp"
#include "opal/smc.hpp"

namespace opal {

/// Bounds for the exhaustive symmetric monoidal law suite.  Coherence and
/// naturality diagrams range over tuples drawn from `objects` whose weights
/// sum to at most `diagram_budget`; category and bifunctoriality laws range
/// over chains of objects of weight at most `chain_budget` each (for
/// bifunctoriality, paired objects must also fit the diagram budget).
template <class C>
struct SmcSuiteBounds {
  std::vector<typename C::Object> objects;
  std::function<std::size_t(const typename C::Object&)> weight;
  std::size_t diagram_budget = 0;
  std::size_t chain_budget = 0;
};

inline const std::vector<std::string>& smc_law_names() {
  static const std::vector<std::string> names{
      "identity",           "composition_associativity", "tensor_functoriality", "associator_naturality",
      "braiding_naturality", "unitor_naturality",        "associator_inverse",   "unitor_inverse",
      "pentagon",           "unit_triangle",             "unit_triangle_right",  "hexagon",
      "symmetry",           "unit_braiding"};
  return names;
}

namespace smc_law {
enum : std::size_t {
  identity,
  composition_associativity,
  tensor_functoriality,
  associator_naturality,
  braiding_naturality,
  unitor_naturality,
  associator_inverse,
  unitor_inverse,
  pentagon,
  unit_triangle,
  unit_triangle_right,
  hexagon,
  symmetry,
  unit_braiding,
  count
};
}  // namespace smc_law

template <EnumerableCategory C>
class SmcLawChecker {
public:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;

  SmcLawChecker(const C& c, const SmcSuiteBounds<C>& bounds) : c_(c), b_(bounds) {
    for (const auto& x : b_.objects)
      if (b_.weight(x) <= b_.chain_budget) chain_objects_.push_back(x);
    for (std::size_t len = 1; len <= 4; ++len) tuples_[len] = weighted_tuples(b_.objects, len, b_.weight, b_.diagram_budget);
  }

  Recorder run(Execution ex) const {
    Recorder rec(smc_law::count);
    const auto k = chain_objects_.size();
    rec.absorb(run_instances(smc_law::count, k * k, [&](std::size_t i, Recorder& r) { identity(i / k, i % k, r); }, ex));
    rec.absorb(run_instances(smc_law::count, k * k * k, [&](std::size_t i, Recorder& r) { chains(i, r); }, ex));
    rec.absorb(run_instances(smc_law::count, k * k * k, [&](std::size_t i, Recorder& r) { functoriality(i, r); }, ex));
    rec.absorb(run_instances(smc_law::count, tuples_[1].size(), [&](std::size_t i, Recorder& r) {
      if (i == 0) unit_object(r);
      singles(tuples_[1][i], r);
    }, ex));
    rec.absorb(run_instances(smc_law::count, tuples_[2].size(), [&](std::size_t i, Recorder& r) { pairs(tuples_[2][i], r); }, ex));
    rec.absorb(run_instances(smc_law::count, tuples_[3].size(), [&](std::size_t i, Recorder& r) { triples(tuples_[3][i], r); }, ex));
    rec.absorb(run_instances(smc_law::count, tuples_[4].size(), [&](std::size_t i, Recorder& r) { quadruples(tuples_[4][i], r); }, ex));
    return rec;
  }

  std::size_t tuple_count(std::size_t len) const { return tuples_[len].size(); }

private:
  using M = Morphism;

  M id(const Object& a) const { return c_.id(a); }
  M o(const M& g, const M& f) const { return c_.compose(g, f); }
  M t(const M& f, const M& g) const { return c_.tensor(f, g); }
  Object t(const Object& a, const Object& b) const { return c_.tensor(a, b); }
  M lambda(const Object& a) const { return o(c_.right_unitor(a), c_.braiding(c_.unit(), a)); }

  static json objs(std::initializer_list<Object> xs) {
    json j = json::array();
    for (const auto& x : xs) j.push_back(x);
    return j;
  }
  static json mors(std::initializer_list<M> fs) {
    json j = json::array();
    for (const auto& f : fs) j.push_back(f);
    return j;
  }

  void identity(std::size_t ia, std::size_t ib, Recorder& r) const {
    const auto& a = chain_objects_[ia];
    const auto& b = chain_objects_[ib];
    for (const auto& f : c_.hom(a, b)) {
      r.check_equal(smc_law::identity, [&] { return std::pair{o(f, id(a)), f}; }, [&] { return mors({f}); });
      r.check_equal(smc_law::identity, [&] { return std::pair{o(id(b), f), f}; }, [&] { return mors({f}); });
    }
  }

  // Chains a → b → c → d, indexed by (a, b, c); d ranges inside.
  void chains(std::size_t i, Recorder& r) const {
    const auto k = chain_objects_.size();
    const auto& a = chain_objects_[i / (k * k)];
    const auto& b = chain_objects_[(i / k) % k];
    const auto& c = chain_objects_[i % k];
    const auto fs = c_.hom(a, b);
    const auto gs = c_.hom(b, c);
    if (fs.empty() || gs.empty()) return;
    for (const auto& d : chain_objects_)
      for (const auto& h : c_.hom(c, d))
        for (const auto& f : fs)
          for (const auto& g : gs)
            r.check_equal(smc_law::composition_associativity, [&] { return std::pair{o(h, o(g, f)), o(o(h, g), f)}; },
                          [&] { return mors({f, g, h}); });
  }

  // (g⊗g')∘(f⊗f') = (g∘f)⊗(g'∘f') for f: a→b, g: b→c and any f', g' on a
  // second chain; also id_a⊗id_b = id_{a⊗b}.
  void functoriality(std::size_t i, Recorder& r) const {
    const auto k = chain_objects_.size();
    const auto& a = chain_objects_[i / (k * k)];
    const auto& b = chain_objects_[(i / k) % k];
    const auto& c = chain_objects_[i % k];
    r.check_equal(smc_law::tensor_functoriality, [&] { return std::pair{t(id(a), id(b)), id(t(a, b))}; },
                  [&] { return objs({a, b}); });
    const auto fs = c_.hom(a, b);
    const auto gs = c_.hom(b, c);
    if (fs.empty() || gs.empty()) return;
    // The second chain is bounded so that each tensored object stays within
    // the diagram budget.
    auto fits = [&](const Object& x, const Object& y) { return b_.weight(x) + b_.weight(y) <= b_.diagram_budget; };
    for (const auto& a2 : chain_objects_)
      for (const auto& b2 : chain_objects_)
        for (const auto& f2 : (fits(a, a2) && fits(b, b2)) ? c_.hom(a2, b2) : std::vector<M>{})
          for (const auto& c2 : chain_objects_)
            for (const auto& g2 : fits(c, c2) ? c_.hom(b2, c2) : std::vector<M>{})
              for (const auto& f : fs)
                for (const auto& g : gs)
                  r.check_equal(smc_law::tensor_functoriality,
                                [&] { return std::pair{o(t(g, g2), t(f, f2)), t(o(g, f), o(g2, f2))}; },
                                [&] { return mors({f, g, f2, g2}); });
  }

  void singles(const std::vector<Object>& xs, Recorder& r) const {
    const auto& a = xs[0];
    const auto e = c_.unit();
    r.check_equal(smc_law::unitor_inverse, [&] { return std::pair{o(c_.right_unitor_inverse(a), c_.right_unitor(a)), id(t(a, e))}; },
                  [&] { return objs({a}); });
    r.check_equal(smc_law::unitor_inverse, [&] { return std::pair{o(c_.right_unitor(a), c_.right_unitor_inverse(a)), id(a)}; },
                  [&] { return objs({a}); });
    for (const auto& a2 : tuples_[1]) {
      for (const auto& f : c_.hom(a, a2[0]))
        r.check_equal(smc_law::unitor_naturality,
                      [&] { return std::pair{o(c_.right_unitor(a2[0]), t(f, id(e))), o(f, c_.right_unitor(a))}; },
                      [&] { return mors({f}); });
    }
  }

  // ρ_e∘τ(e,e) = ρ_e, i.e. the two unitors agree on the unit.
  void unit_object(Recorder& r) const {
    const auto e = c_.unit();
    r.check_equal(smc_law::unit_braiding, [&] { return std::pair{lambda(e), c_.right_unitor(e)}; },
                  [&] { return objs({e}); });
  }

  void pairs(const std::vector<Object>& xs, Recorder& r) const {
    const auto& a = xs[0];
    const auto& b = xs[1];
    const auto e = c_.unit();
    r.check_equal(smc_law::symmetry, [&] { return std::pair{o(c_.braiding(b, a), c_.braiding(a, b)), id(t(a, b))}; },
                  [&] { return objs({a, b}); });
    // (1_a ⊗ λ_b)∘α(a,e,b) = ρ_a ⊗ 1_b
    r.check_equal(smc_law::unit_triangle,
                  [&] { return std::pair{o(t(id(a), lambda(b)), c_.associator(a, e, b)), t(c_.right_unitor(a), id(b))}; },
                  [&] { return objs({a, b}); });
    // (1_a ⊗ ρ_b)∘α(a,b,e) = ρ_{a⊗b}
    r.check_equal(smc_law::unit_triangle_right,
                  [&] { return std::pair{o(t(id(a), c_.right_unitor(b)), c_.associator(a, b, e)), c_.right_unitor(t(a, b))}; },
                  [&] { return objs({a, b}); });
    for (const auto& ys : tuples_[2]) {
      const auto fs = c_.hom(a, ys[0]);
      if (fs.empty()) continue;
      for (const auto& g : c_.hom(b, ys[1]))
        for (const auto& f : fs)
          r.check_equal(smc_law::braiding_naturality,
                        [&] { return std::pair{o(c_.braiding(ys[0], ys[1]), t(f, g)), o(t(g, f), c_.braiding(a, b))}; },
                        [&] { return mors({f, g}); });
    }
  }

  void triples(const std::vector<Object>& xs, Recorder& r) const {
    const auto& a = xs[0];
    const auto& b = xs[1];
    const auto& c = xs[2];
    r.check_equal(smc_law::associator_inverse,
                  [&] { return std::pair{o(c_.associator_inverse(a, b, c), c_.associator(a, b, c)), id(t(t(a, b), c))}; },
                  [&] { return objs({a, b, c}); });
    r.check_equal(smc_law::associator_inverse,
                  [&] { return std::pair{o(c_.associator(a, b, c), c_.associator_inverse(a, b, c)), id(t(a, t(b, c)))}; },
                  [&] { return objs({a, b, c}); });
    // α(b,c,a)∘τ(a,b⊗c)∘α(a,b,c) = (1_b⊗τ(a,c))∘α(b,a,c)∘(τ(a,b)⊗1_c)
    r.check_equal(smc_law::hexagon,
                  [&] {
                    return std::pair{o(c_.associator(b, c, a), o(c_.braiding(a, t(b, c)), c_.associator(a, b, c))),
                                     o(t(id(b), c_.braiding(a, c)), o(c_.associator(b, a, c), t(c_.braiding(a, b), id(c))))};
                  },
                  [&] { return objs({a, b, c}); });
    for (const auto& ys : tuples_[3]) {
      const auto fs = c_.hom(a, ys[0]);
      const auto gs = c_.hom(b, ys[1]);
      if (fs.empty() || gs.empty()) continue;
      for (const auto& h : c_.hom(c, ys[2]))
        for (const auto& f : fs)
          for (const auto& g : gs)
            r.check_equal(smc_law::associator_naturality,
                          [&] {
                            return std::pair{o(c_.associator(ys[0], ys[1], ys[2]), t(t(f, g), h)),
                                             o(t(f, t(g, h)), c_.associator(a, b, c))};
                          },
                          [&] { return mors({f, g, h}); });
    }
  }

  void quadruples(const std::vector<Object>& xs, Recorder& r) const {
    const auto& a = xs[0];
    const auto& b = xs[1];
    const auto& c = xs[2];
    const auto& d = xs[3];
    // α(a,b,c⊗d)∘α(a⊗b,c,d) = (1_a⊗α(b,c,d))∘α(a,b⊗c,d)∘(α(a,b,c)⊗1_d)
    r.check_equal(smc_law::pentagon,
                  [&] {
                    return std::pair{o(c_.associator(a, b, t(c, d)), c_.associator(t(a, b), c, d)),
                                     o(t(id(a), c_.associator(b, c, d)),
                                       o(c_.associator(a, t(b, c), d), t(c_.associator(a, b, c), id(d))))};
                  },
                  [&] { return objs({a, b, c, d}); });
  }

  const C& c_;
  const SmcSuiteBounds<C>& b_;
  std::vector<Object> chain_objects_;
  std::vector<std::vector<Object>> tuples_[5];
};

template <EnumerableCategory C>
SuiteReport smc_law_suite(std::string name, const C& c, const SmcSuiteBounds<C>& bounds, Execution ex) {
  SmcLawChecker<C> checker(c, bounds);
  auto report = make_report(std::move(name), smc_law_names(), checker.run(ex));
  report.parameters = json{{"diagram_budget", bounds.diagram_budget},
                           {"chain_budget", bounds.chain_budget},
                           {"generating_objects", bounds.objects.size()}};
  return report;
}

}  // namespace opal
