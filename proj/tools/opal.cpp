// Command-line front end: run the law suites, list hom-sets, evaluate Y-objects
// in H and export the finite structures.
//
// Exit status: 0 when everything checked passes, 1 when a law fails, 2 for a
// usage, configuration or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "opal/free_permutative.hpp"
#include "opal/verify.hpp"

namespace {

using namespace opal;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

json parse_arg(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(what + ": " + e.what());
  }
}

std::vector<ZObject> tuple_from_json(const json& j) {
  if (!j.is_array()) throw StructuralError("expected a JSON array of objects");
  std::vector<ZObject> out;
  for (const auto& x : j) out.push_back(zobject_from_json(x));
  return out;
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

std::string tuple_label(const std::vector<ZObject>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
  return s + ")";
}

std::string perm_label(const Permutation& p) { return json(p).dump(); }

// Prints the listing as JSON lines or, with --dot, as a two-node multigraph
// whose edges are the morphisms.
template <class Morphism, class Label>
void print_hom(const std::vector<Morphism>& hom, const std::string& from, const std::string& to, bool dot,
               Label label) {
  if (!dot) {
    for (const auto& m : hom) std::cout << json(m).dump() << '\n';
    return;
  }
  std::cout << "digraph hom {\n  rankdir=LR;\n";
  std::cout << "  source [label=" << quoted(from) << "];\n  target [label=" << quoted(to) << "];\n";
  for (const auto& m : hom) std::cout << "  source -> target [label=" << quoted(label(m)) << "];\n";
  std::cout << "}\n";
}

struct VerifyOptions {
  std::optional<std::size_t> max_tuple_length, max_width, max_arity;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> kappas, mutations;
  bool json_out = false, serial = false;
};

SuiteConfig build_config(const VerifyOptions& o) {
  SuiteConfig config;
  if (const char* path = std::getenv("OPAL_SUITE_CONFIG"); path && *path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(std::string("cannot open config file ") + path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw ConfigError(std::string("config file ") + path + ": " + e.what());
    }
    apply_config_json(config, j);
  }
  if (o.max_tuple_length) config.max_tuple_length = *o.max_tuple_length;
  if (o.max_width) config.max_width = *o.max_width;
  if (o.max_arity) config.max_arity = *o.max_arity;
  if (o.seed) config.seed = *o.seed;
  if (!o.kappas.empty()) config.kappas = o.kappas;
  for (const auto& m : o.mutations)
    if (!enable_fault(config.faults, m)) throw ConfigError("unknown mutation \"" + m + "\"");
  validate(config);
  return config;
}

int cmd_verify(const VerifyOptions& o) {
  const auto config = build_config(o);
  const auto reports = run_verify(config, o.serial ? Execution::serial : Execution::parallel);
  const auto report = verify_report(config, reports);
  if (o.json_out) {
    std::cout << report.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << "  checked=" << r.checked()
                << " failed=" << r.failed() << '\n';
      for (const auto& law : r.laws)
        if (!law.passed()) std::cout << "    " << law.name << ": " << law.tally.failed << " failures\n";
    }
    std::cout << (report["passed"].get<bool>() ? "verify: all suites passed" : "verify: FAILED") << '\n';
  }
  return report["passed"].get<bool>() ? exit_pass : exit_fail;
}

int cmd_hom(const std::string& category, const std::string& source, const std::string& target,
            const std::string& kappa, bool dot) {
  const HCategory h;
  const auto src = parse_arg(source, "source");
  const auto tgt = parse_arg(target, "target");
  if (category == "h") {
    const auto a = zobject_from_json(src), b = zobject_from_json(tgt);
    print_hom(h.hom(a, b), to_string(a), to_string(b), dot, [](const HMorphism& f) { return perm_label(f.perm); });
    return exit_pass;
  }
  const auto family = resolve_kappa(kappa, 0).family;
  const Underlying<HCategory> u(h, family);
  if (category == "u") {
    const auto xs = tuple_from_json(src);
    const auto y = zobject_from_json(tgt);
    const auto hom = u.hom(std::span<const ZObject>(xs), y);
    print_hom(hom, tuple_label(xs), to_string(y), dot,
              [](const Underlying<HCategory>::Arrow& f) { return perm_label(f.payload.perm); });
    return exit_pass;
  }
  if (category == "l") {
    const FreePermutative<Underlying<HCategory>> l(u);
    const auto xs = tuple_from_json(src), ys = tuple_from_json(tgt);
    print_hom(l.hom(xs, ys), tuple_label(xs), tuple_label(ys), dot, [](const auto& m) {
      json parts = json::array();
      for (const auto& c : m.components) parts.push_back(c.payload.perm);
      return "f=" + json(m.f).dump() + " " + parts.dump();
    });
    return exit_pass;
  }
  throw UsageError("unknown category \"" + category + "\" (expected h, u or l)");
}

int cmd_eval(const std::string& y_text, const std::string& xs_text, const std::optional<std::string>& y2_text) {
  const HCategory h;
  const auto y = yobject_from_json(parse_arg(y_text, "Y-object"));
  const auto xs = tuple_from_json(parse_arg(xs_text, "tuple"));
  if (xs.size() != y.arity())
    throw UsageError("arity mismatch: Y-object of arity " + std::to_string(y.arity()) + " applied to " +
                     std::to_string(xs.size()) + " objects");
  const std::span<const ZObject> sx(xs);
  if (!y2_text) {
    std::cout << json(eval_obj(h, y, sx)).dump() << '\n';
    return exit_pass;
  }
  const auto y2 = yobject_from_json(parse_arg(*y2_text, "second Y-object"));
  if (y2.arity() != y.arity())
    throw UsageError("arity mismatch: Y-objects of arities " + std::to_string(y.arity()) + " and " +
                     std::to_string(y2.arity()));
  std::cout << json(eval_can_iso(h, y, y2, sx)).dump() << '\n';
  return exit_pass;
}

int cmd_export(const std::string& what, std::size_t max_width, std::size_t max_arity, std::size_t max_length,
               const std::string& kappa, bool dot) {
  if (what == "h") {
    const auto objects = HCategory::objects_up_to_width(max_width);
    if (!dot) {
      for (const auto& x : objects) std::cout << json(x).dump() << '\n';
      return exit_pass;
    }
    // Objects joined when they are isomorphic, i.e. have the same arity;
    // the label is the size of the hom-set.
    std::cout << "graph H {\n";
    for (std::size_t i = 0; i < objects.size(); ++i)
      std::cout << "  n" << i << " [label=" << quoted(to_string(objects[i])) << "];\n";
    for (std::size_t i = 0; i < objects.size(); ++i)
      for (std::size_t j = i + 1; j < objects.size(); ++j)
        if (objects[i].arity() == objects[j].arity())
          std::cout << "  n" << i << " -- n" << j << " [label=\"" << Permutation::all(objects[i].arity()).size()
                    << "\"];\n";
    std::cout << "}\n";
    return exit_pass;
  }
  if (what == "y") {
    std::vector<YObject> ys;
    for (std::size_t n = 0; n <= max_arity; ++n)
      for (std::size_t w = std::max<std::size_t>(n, 1); w <= max_width; ++w)
        for (auto& y : all_y_objects(n, w)) ys.push_back(std::move(y));
    if (!dot) {
      for (const auto& y : ys) std::cout << json(y).dump() << '\n';
      return exit_pass;
    }
    // Edges are the actions of adjacent transpositions.
    std::cout << "digraph Y {\n";
    for (std::size_t i = 0; i < ys.size(); ++i)
      std::cout << "  n" << i << " [label=" << quoted(to_string(ys[i])) << "];\n";
    for (std::size_t i = 0; i < ys.size(); ++i)
      for (std::size_t k = 1; k < ys[i].arity(); ++k) {
        const auto moved = act_y(ys[i], Permutation::transposition(ys[i].arity(), static_cast<int>(k),
                                                                   static_cast<int>(k + 1)));
        const auto j = static_cast<std::size_t>(std::find(ys.begin(), ys.end(), moved) - ys.begin());
        std::cout << "  n" << i << " -> n" << j << " [label=\"(" << k << " " << k + 1 << ")\"];\n";
      }
    std::cout << "}\n";
    return exit_pass;
  }
  if (what == "kappa") {
    if (dot) throw UsageError("--dot is not available for kappa tables");
    const auto family = resolve_kappa(kappa, max_length).family;
    const HCategory h;
    const auto gens = HCategory::objects_up_to_width(std::max<std::size_t>(max_width, 1) - 1);
    for (std::size_t n = 0; n <= max_length; ++n)
      for (const auto& xs : weighted_tuples(gens, n, [](const ZObject&) { return 0; }, 0)) {
        const std::span<const ZObject> sx(xs);
        const auto y = family(sx);
        std::cout << json{{"tuple", xs}, {"kappa", y}, {"kappa_bar", eval_obj(h, y, sx)}}.dump() << '\n';
      }
    return exit_pass;
  }
  throw UsageError("unknown export \"" + what + "\" (expected h, y or kappa)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Law suites and explorations for symmetric monoidal categories and their multicategories"};
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "run every law suite and report");
  verify->add_option("--max-tuple-length", vo.max_tuple_length, "longest source tuple (default 4)");
  verify->add_option("--max-width", vo.max_width, "width bound for H-objects (default 3)");
  verify->add_option("--max-arity", vo.max_arity, "arity bound for Y-objects (default 3)");
  verify->add_option("--seed", vo.seed, "seed for the randomized supplements (default 7)");
  verify->add_option("--kappa", vo.kappas, "default, exotic or file:PATH; repeatable (default: default and exotic)");
  verify->add_option("--mutate", vo.mutations, "switch on a deliberate defect: drop-phi, drop-sigma-f, drop-block-perm");
  verify->add_flag("--json", vo.json_out, "print the full JSON report");
  verify->add_flag("--serial", vo.serial, "run without OpenMP");

  std::string category, source, target, kappa = "default";
  bool dot = false;
  auto* hom = app.add_subcommand("hom", "list a hom-set as JSON lines");
  hom->add_option("category", category, "h (H), u (U_kappa H) or l (L U_kappa H)")->required();
  hom->add_option("source", source, "source object (h) or JSON array of objects (u, l)")->required();
  hom->add_option("target", target, "target object (h, u) or JSON array of objects (l)")->required();
  hom->add_option("--kappa", kappa, "kappa family for u and l");
  hom->add_flag("--dot", dot, "print a DOT graph instead");

  std::string y_text, xs_text;
  std::optional<std::string> y2_text;
  auto* eval = app.add_subcommand("eval", "evaluate a Y-object in H, or the canonical map between two");
  eval->add_option("y", y_text, "Y-object as JSON")->required();
  eval->add_option("xs", xs_text, "JSON array of H-objects")->required();
  eval->add_option("y2", y2_text, "second Y-object: print the canonical isomorphism");

  std::string what;
  std::size_t ex_width = 3, ex_arity = 3, ex_length = 4;
  auto* exp = app.add_subcommand("export", "print finite structures as JSON lines or DOT");
  exp->add_option("what", what, "h, y or kappa")->required();
  exp->add_option("--max-width", ex_width, "width bound");
  exp->add_option("--max-arity", ex_arity, "arity bound for y");
  exp->add_option("--max-tuple-length", ex_length, "tuple length bound for kappa");
  exp->add_option("--kappa", kappa, "kappa family for kappa tables");
  exp->add_flag("--dot", dot, "print a DOT graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*verify) return cmd_verify(vo);
    if (*hom) return cmd_hom(category, source, target, kappa, dot);
    if (*eval) return cmd_eval(y_text, xs_text, y2_text);
    if (*exp) return cmd_export(what, ex_width, ex_arity, ex_length, kappa, dot);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return exit_usage;
}
