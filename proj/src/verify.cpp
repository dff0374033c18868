#include "opal/verify.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "opal/adjunction.hpp"
#include "opal/core_suites.hpp"
#include "opal/h_functors.hpp"
#include "opal/iso_suite.hpp"
#include "opal/smc_laws.hpp"

namespace opal {

namespace {

constexpr std::size_t random_samples = 200;

std::size_t to_size(const json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ConfigError("config: " + key + " must be a non-negative integer");
  return v.get<std::size_t>();
}

using U = Underlying<HCategory>;
using L = FreePermutative<U>;

ZObject tree_of(std::initializer_list<int> marks, Paren p) { return ZObject(std::move(p), std::vector<int>(marks)); }

// Three leaves with the middle one unmarked, so substitution changes shapes
// and doubles arities.
ZObject substitution_word() {
  return tree_of({1, 3}, Paren::node(Paren::leaf(), Paren::node(Paren::leaf(), Paren::leaf())));
}

std::vector<CellFunctor<HCategory>> test_functors(const HCategory& h) {
  using K = CellFunctor<HCategory>::Kind;
  return {{identity_lax(h), K::strict},
          {substitution_functor(h, substitution_word()), K::strict},
          {pad_functor(h), K::strong},
          {mirror_functor(h), K::strong}};
}

}  // namespace

json SuiteConfig::to_json() const {
  json ks = json::array();
  for (const auto& k : kappas) ks.push_back(k);
  return json{{"max_tuple_length", max_tuple_length},
              {"max_width", max_width},
              {"max_arity", max_arity},
              {"seed", seed},
              {"kappa", ks},
              {"mutate", fault_names(faults)}};
}

void apply_config_json(SuiteConfig& config, const json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "max_tuple_length") config.max_tuple_length = to_size(v, key);
    else if (key == "max_width") config.max_width = to_size(v, key);
    else if (key == "max_arity") config.max_arity = to_size(v, key);
    else if (key == "seed") config.seed = to_size(v, key);
    else if (key == "kappa") {
      config.kappas.clear();
      if (v.is_string()) config.kappas.push_back(v.get<std::string>());
      else if (v.is_array()) {
        for (const auto& k : v) {
          if (!k.is_string()) throw ConfigError("config: kappa entries must be strings");
          config.kappas.push_back(k.get<std::string>());
        }
      } else
        throw ConfigError("config: kappa must be a string or an array of strings");
    } else if (key == "mutate") {
      if (!v.is_array()) throw ConfigError("config: mutate must be an array of fault names");
      for (const auto& m : v)
        if (!m.is_string() || !enable_fault(config.faults, m.get<std::string>()))
          throw ConfigError("config: unknown mutation " + m.dump());
    } else
      throw ConfigError("config: unknown key \"" + key + "\"");
  }
}

NamedKappa resolve_kappa(const std::string& choice, std::size_t max_length) {
  if (choice == "default") return {"default", default_kappa_family<ZObject>()};
  if (choice == "exotic") return {"exotic", exotic_kappa_family()};
  if (choice == "right_nested") return {"right_nested", right_nested_kappa_family<ZObject>()};
  if (!choice.starts_with("file:")) throw ConfigError("unknown kappa choice \"" + choice + "\"");
  const auto path = choice.substr(5);
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open kappa file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("kappa file " + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("kappa") || !j.at("kappa").is_array())
    throw ConfigError("kappa file " + path + ": expected {\"kappa\": [y_0, y_1, …]}");
  std::vector<YObject> table;
  try {
    for (const auto& y : j.at("kappa")) table.push_back(yobject_from_json(y));
  } catch (const std::exception& e) {
    throw ConfigError("kappa file " + path + ": " + e.what());
  }
  if (table.size() <= max_length)
    throw ConfigError("kappa file " + path + ": needs entries for every length up to " + std::to_string(max_length));
  for (std::size_t n = 0; n < table.size(); ++n)
    if (table[n].arity() != n)
      throw ConfigError("kappa file " + path + ": entry " + std::to_string(n) + " has arity " +
                        std::to_string(table[n].arity()));
  const auto name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "file";
  return {name, [table](std::span<const ZObject> xs) {
            if (xs.size() >= table.size()) throw StructuralError("kappa table has no entry for this length");
            return table[xs.size()];
          }};
}

void validate(const SuiteConfig& config) {
  for (const auto& k : config.kappas) resolve_kappa(k, config.max_tuple_length);
}

std::size_t generator_width(const SuiteConfig& config) { return std::max<std::size_t>(config.max_width, 1) - 1; }

std::vector<SuiteReport> run_verify(const SuiteConfig& config, Execution ex) {
  const HCategory h;
  const auto len = config.max_tuple_length;
  const auto small = std::min<std::size_t>(len, 3);
  const auto gens = HCategory::objects_up_to_width(generator_width(config));
  const Faults& faults = config.faults;
  std::vector<SuiteReport> out;

  out.push_back(h_law_suite(config.max_width + 1, config.max_width, ex));
  out.push_back(y_law_suite(config.max_arity, config.max_width + 1, faults, ex));

  std::vector<NamedKappa> kappas;
  if (config.kappas.empty()) kappas = {resolve_kappa("default", len), resolve_kappa("exotic", len)};
  for (const auto& k : config.kappas) kappas.push_back(resolve_kappa(k, len));
  for (const auto& k : kappas)
    out.push_back(multicat_law_suite("U_kappa_H:" + k.name, U(h, k.family, faults), gens,
                                     MulticatBounds{len, random_samples, config.seed}, ex));

  // The comparison triangle always involves three distinct families; file
  // families join them.
  std::vector<std::pair<std::string, U>> families;
  std::set<std::string> seen;
  for (const auto* name : {"default", "exotic", "right_nested"}) {
    families.emplace_back(name, U(h, resolve_kappa(name, len).family, faults));
    seen.insert(name);
  }
  for (const auto& k : kappas)
    if (seen.insert(k.name).second) families.emplace_back(k.name, U(h, k.family, faults));
  out.push_back(kappa_iso_suite("kappa_comparison", families, gens, len, ex));

  const U u(h, default_kappa_family<ZObject>(), faults);
  auto cells = test_functors(h);
  std::vector<HFunctor> functors;
  for (const auto& c : cells) functors.push_back(c.functor);
  functors.push_back(compose_lax(functors[3], functors[2]));
  const auto unit_gens = HCategory::objects_up_to_width(std::min<std::size_t>(generator_width(config), 1));
  for (const auto& F : functors) {
    out.push_back(lax_coherence_suite(F, gens, ex));
    out.push_back(round_trip_suite(F, u, gens, small, ex));
    out.push_back(xi_lemma_suite(F, unit_gens, len, config.max_arity, ex));
    out.push_back(multifunctor_suite(lax_to_multifunctor(F, u, u, gens), u, u, gens, small, ex));
  }

  const L l(u);
  const ZObject e, a(Paren::leaf(), {1}), b(Paren::node(Paren::leaf(), Paren::leaf()), {1, 2});
  std::vector<L::Object> list_objects{{}, {e}, {a}, {b}, {a, e}, {a, a}};
  SmcSuiteBounds<L> l_bounds{list_objects,
                             [](const L::Object& xs) {
                               std::size_t n = 0;
                               for (const auto& x : xs) n += x.width() + 1;
                               return n;
                             },
                             7, 2};
  auto l_report = smc_law_suite("L(U_kappa_H)", l, l_bounds, ex);
  out.push_back(std::move(l_report));
  out.push_back(lax_coherence_suite(counit(u, l, faults), {{}, {e}, {a}, {b}, {a, a}, {e, a}, {a, b}}, ex));

  AdjunctionBounds bounds{small, small, std::min<std::size_t>(len, 2), std::min<std::size_t>(len, 2)};
  out.push_back(adjunction_suite("adjunction", h, gens, {e, a, b}, cells, bounds, faults, ex));
  return out;
}

json verify_report(const SuiteConfig& config, const std::vector<SuiteReport>& reports) {
  json suites = json::array();
  bool passed = true;
  for (const auto& r : reports) {
    suites.push_back(r.to_json());
    passed = passed && r.passed();
  }
  return json{{"config", config.to_json()}, {"passed", passed}, {"suites", suites}};
}

}  // namespace opal
