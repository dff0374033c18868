#include "opal/core_suites.hpp"

#include <map>

#include "opal/h_category.hpp"
#include "opal/smc_laws.hpp"

namespace opal {

SuiteReport h_law_suite(std::size_t diagram_width, std::size_t chain_width, Execution ex) {
  const HCategory h;
  SmcSuiteBounds<HCategory> bounds{HCategory::objects_up_to_width(diagram_width),
                                   [](const ZObject& z) { return z.width(); }, diagram_width, chain_width};
  auto report = smc_law_suite("H", h, bounds, ex);

  // The hexagon in H reduces to a statement about block transpositions.
  const auto triples = weighted_tuples(bounds.objects, 3, bounds.weight, diagram_width);
  Recorder rec(1);
  auto checked = run_instances(1, triples.size(), [&](std::size_t i, Recorder& r) {
    const auto n = triples[i][0].arity(), m = triples[i][1].arity(), t = triples[i][2].arity();
    r.check_equal(0, [&] {
      return std::pair{compose(block_sum({Permutation::identity(m), block_transposition(n, t)}),
                               block_sum({block_transposition(n, m), Permutation::identity(t)})),
                       block_transposition(n, m + t)};
    }, [&] { return json{n, m, t}; });
  }, ex);
  report.laws.push_back({"block_transposition_identity", std::move(checked.tallies()[0])});
  return report;
}

namespace {

enum YLaw : std::size_t {
  action_identity,
  action_composition,
  unit_left,
  unit_right,
  associativity,
  equivariance_1,
  equivariance_2,
  y_law_count
};

const std::vector<std::string> y_law_names{"action_identity", "action_composition", "unit_left", "unit_right",
                                           "gamma_associativity", "equivariance_1", "equivariance_2"};

json describe(const YObject& b, const std::vector<YObject>& parts) {
  return json{{"outer", b}, {"parts", parts}};
}

class YLawChecker {
public:
  YLawChecker(std::size_t max_arity, std::size_t max_width, const Faults& faults)
      : max_arity_(max_arity), max_width_(max_width), faults_(faults) {
    for (std::size_t a = 0; a <= max_arity; ++a)
      for (std::size_t w = 1; w <= max_width; ++w)
        for (auto& y : all_y_objects(a, w)) pool_.push_back(y);
    // A composite γ(b; p⃗) has width w(b) + Σ (w(p_i) − 1).
    for (const auto& b : pool_) {
      const auto budget = max_width_ - b.z.width();
      for (auto& parts : weighted_tuples(pool_, b.arity(), excess, budget)) {
        std::size_t arity = 0;
        for (const auto& p : parts) arity += p.arity();
        if (arity <= max_arity_) compositions_.push_back({b, std::move(parts)});
      }
    }
  }

  Recorder run(Execution ex) const {
    Recorder rec(y_law_count);
    rec.absorb(run_instances(y_law_count, pool_.size(), [&](std::size_t i, Recorder& r) { objects(pool_[i], r); }, ex));
    rec.absorb(run_instances(y_law_count, compositions_.size(),
                             [&](std::size_t i, Recorder& r) { composite(compositions_[i], r); }, ex));
    return rec;
  }

private:
  struct Composition {
    YObject outer;
    std::vector<YObject> parts;
  };

  static std::size_t excess(const YObject& y) { return y.z.width() - 1; }

  YObject gamma(const YObject& b, const std::vector<YObject>& parts) const { return gamma_y(b, parts, faults_); }

  void objects(const YObject& y, Recorder& r) const {
    const auto n = y.arity();
    const auto& g = generators();
    r.check_equal(action_identity, [&] { return std::pair{act_y(y, Permutation::identity(n)), y}; },
                  [&] { return json{{"y", y}}; });
    const auto perms = Permutation::all(n);
    for (const auto& s : perms)
      for (const auto& t : perms)
        r.check_equal(action_composition, [&] { return std::pair{act_y(act_y(y, s), t), act_y(y, compose(s, t))}; },
                      [&] { return json{{"y", y}, {"s", s}, {"t", t}}; });
    r.check_equal(unit_left, [&] { return std::pair{gamma(g.one, {y}), y}; }, [&] { return json{{"y", y}}; });
    r.check_equal(unit_right, [&] { return std::pair{gamma(y, std::vector<YObject>(n, g.one)), y}; },
                  [&] { return json{{"y", y}}; });
  }

  void composite(const Composition& c, Recorder& r) const {
    const auto& b = c.outer;
    const auto& parts = c.parts;
    const auto n = b.arity();
    const auto inner = gamma(b, parts);
    const auto spare = max_width_ - inner.z.width();

    // γ(γ(b; p⃗); q⃗) = γ(b; γ(p_1; q⃗_1), …, γ(p_n; q⃗_n))
    for (const auto& qs : weighted_tuples(pool_, inner.arity(), excess, spare)) {
      std::size_t arity = 0;
      for (const auto& q : qs) arity += q.arity();
      if (arity > max_arity_) continue;
      r.check_equal(associativity, [&] {
        std::vector<YObject> regrouped;
        std::size_t next = 0;
        for (const auto& p : parts) {
          std::vector<YObject> block(qs.begin() + static_cast<long>(next), qs.begin() + static_cast<long>(next + p.arity()));
          next += p.arity();
          regrouped.push_back(gamma(p, block));
        }
        return std::pair{gamma(inner, qs), gamma(b, regrouped)};
      }, [&] { json j = describe(b, parts); j["inner_parts"] = qs; return j; });
    }

    // γ(b·s; p_{s(1)},…,p_{s(n)}) = γ(b; p⃗)·s⟨j_{s(1)},…,j_{s(n)}⟩
    for (const auto& s : Permutation::all(n)) {
      r.check_equal(equivariance_1, [&] {
        const auto permuted = act_inverse(s, parts);
        std::vector<std::size_t> sizes;
        for (const auto& p : permuted) sizes.push_back(p.arity());
        return std::pair{gamma(act_y(b, s), permuted), act_y(inner, block_perm(s, sizes))};
      }, [&] { json j = describe(b, parts); j["s"] = s; return j; });
    }

    // γ(b; p_1·t_1, …, p_n·t_n) = γ(b; p⃗)·(t_1⊕…⊕t_n)
    std::vector<std::vector<Permutation>> choices{{}};
    for (const auto& p : parts) {
      std::vector<std::vector<Permutation>> next;
      for (const auto& prefix : choices)
        for (const auto& t : Permutation::all(p.arity())) {
          auto extended = prefix;
          extended.push_back(t);
          next.push_back(std::move(extended));
        }
      choices = std::move(next);
    }
    for (const auto& ts : choices) {
      r.check_equal(equivariance_2, [&] {
        std::vector<YObject> acted;
        for (std::size_t i = 0; i < n; ++i) acted.push_back(act_y(parts[i], ts[i]));
        return std::pair{gamma(b, acted), act_y(inner, block_sum(ts))};
      }, [&] { json j = describe(b, parts); j["t"] = ts; return j; });
    }
  }

  std::size_t max_arity_, max_width_;
  Faults faults_;
  std::vector<YObject> pool_;
  std::vector<Composition> compositions_;
};

}  // namespace

SuiteReport y_law_suite(std::size_t max_arity, std::size_t max_width, const Faults& faults, Execution ex) {
  YLawChecker checker(max_arity, max_width, faults);
  auto report = make_report("Y", y_law_names, checker.run(ex));
  report.parameters = json{{"max_arity", max_arity}, {"max_width", max_width}, {"faults", fault_names(faults)}};
  return report;
}

}  // namespace opal
