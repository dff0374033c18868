#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "opal/multicat_laws.hpp"

namespace opal {

inline const std::vector<std::string>& iso_law_names() {
  static const std::vector<std::string> names{"self_iso_identity", "hom_bijection",  "preserves_identity",
                                              "preserves_action",  "preserves_gamma", "triangle",
                                              "round_trip"};
  return names;
}

namespace iso_law {
enum : std::size_t {
  self_iso_identity,
  hom_bijection,
  preserves_identity,
  preserves_action,
  preserves_gamma,
  triangle,
  round_trip,
  count
};
}  // namespace iso_law

/// The comparison isomorphisms U_κC → U_λC between every ordered pair of the
/// given κ families.  Per-arrow laws run on every arrow over `generators` with
/// source length at most max_length; Γ-preservation runs on every Γ(f; g⃗)
/// whose source tuples have total length at most max_length.
template <SymmetricMonoidal C>
  requires EnumerableCategory<C>
SuiteReport kappa_iso_suite(std::string name, const std::vector<std::pair<std::string, Underlying<C>>>& families,
                            const std::vector<typename C::Object>& generators, std::size_t max_length,
                            Execution ex) {
  using U = Underlying<C>;
  using Object = typename C::Object;
  using Arrow = typename U::Arrow;
  const std::size_t k = families.size();
  std::vector<ArrowTable<U>> tables;
  for (const auto& [_, u] : families) tables.emplace_back(u, generators, max_length);

  // Instance i = (family a, arrow index); every family has the same number of
  // arrows in the same order since hom-set sizes depend only on levels.
  const auto per_family = tables.empty() ? 0 : tables.front().all().size();

  // The comparison map only depends on the source tuple, so its canonical
  // part is memoised per ordered pair of families.
  struct TupleHash {
    std::size_t operator()(const std::vector<Object>& t) const noexcept { return hash_range(t); }
  };
  std::vector<std::unique_ptr<Memo<std::vector<Object>, typename C::Morphism, TupleHash>>> memos;
  for (std::size_t i = 0; i < k * k; ++i) memos.push_back(std::make_unique<typename decltype(memos)::value_type::element_type>());
  auto compare = [&](std::size_t a, std::size_t b, const Arrow& g) {
    const auto& from = families[a].second;
    const auto& to = families[b].second;
    auto can = memos[a * k + b]->get(g.source, [&] {
      const std::span<const Object> ys(g.source);
      return eval_can_iso(from.category(), to.kappa(ys), from.kappa(ys), ys);
    });
    return Arrow{g.source, g.target, from.category().compose(g.payload, can)};
  };
  auto rec = run_instances(iso_law::count, k * per_family, [&](std::size_t i, Recorder& r) {
    const std::size_t a = i / per_family;
    const auto& from = families[a].second;
    const auto& f = tables[a].all()[i % per_family];
    const std::span<const Object> xs(f.source);
    auto tag = [&](std::size_t b) { return families[a].first + "→" + families[b].first; };

    r.check_equal(iso_law::self_iso_identity, [&] { return std::pair{canonical_iso(from, from, f), f}; },
                  [&] { return json{{"family", families[a].first}, {"arrow", f}}; });

    const auto hom_from = from.hom(xs, f.target);
    const bool first_in_hom = hom_from.front() == f;
    for (std::size_t b = 0; b < k; ++b) {
      const auto& to = families[b].second;
      auto iso = [&](const Arrow& g) { return compare(a, b, g); };
      const auto fi = canonical_iso(from, to, f);
      const auto n = f.arity();

      // Bijectivity is a property of the whole hom-set; check it once per
      // hom-set, at its first arrow.
      if (first_in_hom) {
        r.check(iso_law::hom_bijection, [&] {
          auto key = [](const Arrow& x) { return json(x).dump(); };
          std::vector<std::string> image, target;
          for (const auto& g : hom_from) image.push_back(key(iso(g)));
          for (const auto& g : to.hom(xs, f.target)) target.push_back(key(g));
          std::sort(image.begin(), image.end());
          std::sort(target.begin(), target.end());
          return std::adjacent_find(image.begin(), image.end()) == image.end() && image == target;
        }, [&] { return json{{"map", tag(b)}, {"source", f.source}, {"target", f.target}}; });
      }

      if (n == 1 && f == from.identity(f.target))
        r.check_equal(iso_law::preserves_identity, [&] { return std::pair{fi, to.identity(f.target)}; },
                      [&] { return json{{"map", tag(b)}, {"object", f.target}}; });

      for (const auto& s : Permutation::all(n))
        r.check_equal(iso_law::preserves_action,
                      [&] { return std::pair{iso(from.sigma_star(f, s)), to.sigma_star(fi, s)}; },
                      [&] { return json{{"map", tag(b)}, {"arrow", f}, {"s", s}}; });

      tables[a].for_each_inner(f.source, max_length - n, [&](const std::vector<Arrow>& gs) {
        r.check_equal(iso_law::preserves_gamma, [&] {
          std::vector<Arrow> mapped;
          for (const auto& g : gs) mapped.push_back(iso(g));
          return std::pair{iso(from.gamma(f, std::span<const Arrow>(gs))), to.gamma(fi, std::span<const Arrow>(mapped))};
        }, [&] { return json{{"map", tag(b)}, {"outer", f}, {"inner", gs}}; });
      });

      r.check_equal(iso_law::round_trip, [&] { return std::pair{compare(b, a, fi), f}; },
                    [&] { return json{{"map", tag(b)}, {"arrow", f}}; });

      for (std::size_t c = 0; c < k; ++c) {
        if (c == a || c == b || a == b) continue;
        r.check_equal(iso_law::triangle,
                      [&] { return std::pair{compare(b, c, fi), compare(a, c, f)}; },
                      [&] { return json{{"maps", tag(b) + "→" + families[c].first}, {"arrow", f}}; });
      }
    }
  }, ex);

  auto report = make_report(std::move(name), iso_law_names(), std::move(rec));
  json names = json::array();
  for (const auto& [n, _] : families) names.push_back(n);
  report.parameters = json{{"families", names},
                           {"generators", generators.size()},
                           {"max_tuple_length", max_length},
                           {"arrows_per_family", per_family}};
  return report;
}

}  // namespace opal
