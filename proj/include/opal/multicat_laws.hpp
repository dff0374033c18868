#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "opal/laws.hpp"
#include "opal/multicat.hpp"

namespace opal {

/// Every arrow whose source is a tuple over `generators` of length at most
/// max_length and whose target is a generator, grouped by target.
template <Multicategory M>
class ArrowTable {
public:
  using Object = typename M::Object;
  using Arrow = typename M::Arrow;

  ArrowTable(const M& m, const std::vector<Object>& generators, std::size_t max_length) : generators_(generators) {
    for (std::size_t len = 0; len <= max_length; ++len)
      for (const auto& xs : weighted_tuples(generators, len, [](const Object&) { return 0; }, 0))
        for (std::size_t t = 0; t < generators.size(); ++t)
          for (auto& f : m.hom(std::span<const Object>(xs), generators[t])) {
            by_target_[t].push_back(f);
            all_.push_back(std::move(f));
          }
  }

  const std::vector<Arrow>& all() const noexcept { return all_; }
  /// Arrows into `target`, ordered by source length.  Empty for non-generators.
  const std::vector<Arrow>& into(const Object& target) const {
    static const std::vector<Arrow> none;
    for (std::size_t t = 0; t < generators_.size(); ++t)
      if (generators_[t] == target) {
        auto it = by_target_.find(t);
        return it == by_target_.end() ? none : it->second;
      }
    return none;
  }

  /// Calls visit(gs) for every tuple of arrows g_s into targets[s] whose
  /// sources have total length at most budget.
  template <class Visit>
  void for_each_inner(const std::vector<Object>& targets, std::size_t budget, Visit&& visit) const {
    std::vector<Arrow> gs;
    auto rec = [&](auto& self, std::size_t s, std::size_t left) -> void {
      if (s == targets.size()) {
        visit(gs);
        return;
      }
      for (const auto& g : into(targets[s])) {
        if (g.arity() > left) break;
        gs.push_back(g);
        self(self, s + 1, left - g.arity());
        gs.pop_back();
      }
    };
    rec(rec, 0, budget);
  }

private:
  std::vector<Object> generators_;
  std::map<std::size_t, std::vector<Arrow>> by_target_;
  std::vector<Arrow> all_;
};

inline const std::vector<std::string>& multicat_law_names() {
  static const std::vector<std::string> names{"action_identity", "action_composition", "unit_right",
                                              "unit_left",       "gamma_associativity", "equivariance_1",
                                              "equivariance_2"};
  return names;
}

namespace multicat_law {
enum : std::size_t {
  action_identity,
  action_composition,
  unit_right,
  unit_left,
  gamma_associativity,
  equivariance_1,
  equivariance_2,
  count
};
}  // namespace multicat_law

/// Every choice of one permutation per degree in `degrees`.
inline std::vector<std::vector<Permutation>> permutation_tuples(const std::vector<std::size_t>& degrees) {
  std::vector<std::vector<Permutation>> out{{}};
  for (auto d : degrees) {
    std::vector<std::vector<Permutation>> next;
    for (const auto& prefix : out)
      for (const auto& t : Permutation::all(d)) {
        auto extended = prefix;
        extended.push_back(t);
        next.push_back(std::move(extended));
      }
    out = std::move(next);
  }
  return out;
}

/// Size bounds for the multicategory law suite.
///
/// Exhaustive part: the action and unit laws run on every arrow whose source
/// has length at most max_length; Γ-laws run on every diagram in which the
/// source tuples of all participating arrows have total length at most
/// max_length.  Random part: `samples` diagrams in which each level (outer
/// source, joined inner sources, joined innermost sources) separately has
/// length at most max_length, drawn with a generator seeded by `seed`.
struct MulticatBounds {
  std::size_t max_length = 4;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

template <Multicategory M>
class MulticatLawChecker {
public:
  using Object = typename M::Object;
  using Arrow = typename M::Arrow;

  MulticatLawChecker(const M& m, const std::vector<Object>& generators, const MulticatBounds& bounds)
      : m_(m), bounds_(bounds), table_(m, generators, bounds.max_length) {
    draw_samples();
  }

  const ArrowTable<M>& table() const noexcept { return table_; }

  Recorder run(Execution ex) const {
    const auto& arrows = table_.all();
    const auto L = bounds_.max_length;
    auto rec = run_instances(multicat_law::count, arrows.size(), [&](std::size_t i, Recorder& r) {
      const auto& f = arrows[i];
      actions(f, r);
      units(f, r);
      table_.for_each_inner(f.source, L - f.arity(), [&](const std::vector<Arrow>& gs) {
        std::size_t used = f.arity();
        for (const auto& g : gs) used += g.arity();
        composite(f, gs, r, [&](const std::vector<Object>& middle, auto&& visit) {
          table_.for_each_inner(middle, L - used, visit);
        }, std::nullopt, {});
      });
    }, ex);
    rec.absorb(run_instances(multicat_law::count, samples_.size(), [&](std::size_t i, Recorder& r) {
      const auto& d = samples_[i];
      composite(d.outer, d.inner, r, [&](const std::vector<Object>&, auto&& visit) { visit(d.innermost); }, d.s, d.ts);
    }, ex));
    return rec;
  }

private:
  struct Sample {
    Arrow outer;
    std::vector<Arrow> inner;
    std::vector<Arrow> innermost;
    Permutation s;
    std::vector<Permutation> ts;
  };

  static json describe(const Arrow& f, const std::vector<Arrow>& gs) { return json{{"outer", f}, {"inner", gs}}; }

  // Picks one arrow into each target, the joined sources staying within L.
  std::optional<std::vector<Arrow>> draw_inner(const std::vector<Object>& targets, std::mt19937_64& rng) const {
    std::vector<Arrow> out;
    std::size_t left = bounds_.max_length;
    for (const auto& t : targets) {
      const auto& candidates = table_.into(t);
      std::size_t fitting = 0;
      while (fitting < candidates.size() && candidates[fitting].arity() <= left) ++fitting;
      if (fitting == 0) return std::nullopt;
      const auto& g = candidates[std::uniform_int_distribution<std::size_t>(0, fitting - 1)(rng)];
      left -= g.arity();
      out.push_back(g);
    }
    return out;
  }

  static Permutation draw_perm(std::size_t n, std::mt19937_64& rng) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(images);
  }

  void draw_samples() {
    const auto& arrows = table_.all();
    if (bounds_.samples == 0 || arrows.empty()) return;
    std::mt19937_64 rng(bounds_.seed);
    std::size_t attempts = 0;
    while (samples_.size() < bounds_.samples && attempts++ < 100 * bounds_.samples) {
      const auto& f = arrows[std::uniform_int_distribution<std::size_t>(0, arrows.size() - 1)(rng)];
      auto gs = draw_inner(f.source, rng);
      if (!gs) continue;
      std::vector<Object> middle;
      std::vector<Permutation> ts;
      for (const auto& g : *gs) {
        middle.insert(middle.end(), g.source.begin(), g.source.end());
        ts.push_back(draw_perm(g.arity(), rng));
      }
      auto hs = draw_inner(middle, rng);
      if (!hs) continue;
      samples_.push_back({f, std::move(*gs), std::move(*hs), draw_perm(f.arity(), rng), std::move(ts)});
    }
  }

  void actions(const Arrow& f, Recorder& r) const {
    const auto n = f.arity();
    r.check_equal(multicat_law::action_identity, [&] { return std::pair{m_.sigma_star(f, Permutation::identity(n)), f}; },
                  [&] { return json{{"arrow", f}}; });
    const auto perms = Permutation::all(n);
    for (const auto& s : perms) {
      const auto fs = m_.sigma_star(f, s);
      for (const auto& t : perms)
        r.check_equal(multicat_law::action_composition,
                      [&] { return std::pair{m_.sigma_star(fs, t), m_.sigma_star(f, compose(s, t))}; },
                      [&] { return json{{"arrow", f}, {"s", s}, {"t", t}}; });
    }
  }

  void units(const Arrow& f, Recorder& r) const {
    r.check_equal(multicat_law::unit_right, [&] {
      std::vector<Arrow> ids;
      for (const auto& x : f.source) ids.push_back(m_.identity(x));
      return std::pair{m_.gamma(f, std::span<const Arrow>(ids)), f};
    }, [&] { return json{{"arrow", f}}; });
    r.check_equal(multicat_law::unit_left, [&] {
      const std::vector<Arrow> one{f};
      return std::pair{m_.gamma(m_.identity(f.target), std::span<const Arrow>(one)), f};
    }, [&] { return json{{"arrow", f}}; });
  }

  // The Γ-laws for Γ(f; g⃗).  innermost(middle, visit) supplies the h⃗ tuples
  // for associativity; s and ts restrict the equivariance checks to one
  // choice (all choices when absent).
  template <class Innermost>
  void composite(const Arrow& f, const std::vector<Arrow>& gs, Recorder& r, Innermost&& innermost,
                 const std::optional<Permutation>& only_s, const std::vector<Permutation>& only_ts) const {
    const auto n = f.arity();
    std::optional<Arrow> composite;
    // Every law below needs Γ(f; g⃗); if it cannot be formed that is one failure.
    if (!r.check(multicat_law::gamma_associativity, [&] {
          composite = m_.gamma(f, std::span<const Arrow>(gs));
          return true;
        }, [&] { return describe(f, gs); }))
      return;
    const Arrow& fg = *composite;
    std::vector<std::size_t> lengths;
    std::vector<Object> middle;
    for (const auto& g : gs) {
      lengths.push_back(g.arity());
      middle.insert(middle.end(), g.source.begin(), g.source.end());
    }

    // Γ(Γ(f; g⃗); h⃗) = Γ(f; Γ(g_1; h⃗_1), …, Γ(g_n; h⃗_n))
    innermost(middle, [&](const std::vector<Arrow>& hs) {
      r.check_equal(multicat_law::gamma_associativity, [&] {
        std::vector<Arrow> regrouped;
        std::size_t next = 0;
        for (const auto& g : gs) {
          std::vector<Arrow> block(hs.begin() + static_cast<long>(next), hs.begin() + static_cast<long>(next + g.arity()));
          next += g.arity();
          regrouped.push_back(m_.gamma(g, std::span<const Arrow>(block)));
        }
        return std::pair{m_.gamma(fg, std::span<const Arrow>(hs)), m_.gamma(f, std::span<const Arrow>(regrouped))};
      }, [&] { json j = describe(f, gs); j["innermost"] = hs; return j; });
    });

    // Γ(f·σ; g_{σ(1)},…,g_{σ(n)}) = Γ(f; g⃗)·σ⟨j_{σ(1)},…,j_{σ(n)}⟩
    auto equivariance_1 = [&](const Permutation& s) {
      r.check_equal(multicat_law::equivariance_1, [&] {
        const auto permuted = act_inverse(s, gs);
        return std::pair{m_.gamma(m_.sigma_star(f, s), std::span<const Arrow>(permuted)),
                         m_.sigma_star(fg, block_perm(s, act_inverse(s, lengths)))};
      }, [&] { json j = describe(f, gs); j["s"] = s; return j; });
    };
    if (only_s) equivariance_1(*only_s);
    else
      for (const auto& s : Permutation::all(n)) equivariance_1(s);

    // Γ(f; g_1·τ_1,…,g_n·τ_n) = Γ(f; g⃗)·(τ_1⊕…⊕τ_n)
    auto equivariance_2 = [&](const std::vector<Permutation>& ts) {
      r.check_equal(multicat_law::equivariance_2, [&] {
        std::vector<Arrow> acted;
        for (std::size_t i = 0; i < n; ++i) acted.push_back(m_.sigma_star(gs[i], ts[i]));
        return std::pair{m_.gamma(f, std::span<const Arrow>(acted)), m_.sigma_star(fg, block_sum(ts))};
      }, [&] { json j = describe(f, gs); j["t"] = ts; return j; });
    };
    if (only_s) equivariance_2(only_ts);
    else
      for (const auto& ts : permutation_tuples(lengths)) equivariance_2(ts);
  }

  const M& m_;
  MulticatBounds bounds_;
  ArrowTable<M> table_;
  std::vector<Sample> samples_;
};

template <Multicategory M>
SuiteReport multicat_law_suite(std::string name, const M& m, const std::vector<typename M::Object>& generators,
                               const MulticatBounds& bounds, Execution ex) {
  MulticatLawChecker<M> checker(m, generators, bounds);
  auto report = make_report(std::move(name), multicat_law_names(), checker.run(ex));
  report.parameters = json{{"max_tuple_length", bounds.max_length},
                           {"generators", generators.size()},
                           {"arrows", checker.table().all().size()},
                           {"random_samples", bounds.samples},
                           {"seed", bounds.seed}};
  return report;
}

}  // namespace opal
