// One line per acceptance criterion, "PASS"/"FAIL" first.  Usage:
//   opal_acceptance PATH_TO_OPAL_CLI
// The process exits non-zero if any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "opal/adjunction.hpp"
#include "opal/core_suites.hpp"
#include "opal/h_functors.hpp"
#include "opal/iso_suite.hpp"

namespace {

using namespace opal;
using U = Underlying<HCategory>;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

bool has_counterexample(const SuiteReport& r) {
  for (const auto& law : r.laws)
    if (law.tally.first_failure) return true;
  return false;
}

std::string failing_laws(const SuiteReport& r) {
  std::string out;
  for (const auto& law : r.laws)
    if (!law.passed()) out += (out.empty() ? "" : ",") + law.name;
  return out;
}

const ZObject e;
const ZObject a(Paren::leaf(), {1});
const ZObject b(Paren::node(Paren::leaf(), Paren::leaf()), {1, 2});
const ZObject w(Paren::node(Paren::leaf(), Paren::node(Paren::leaf(), Paren::leaf())), {1, 3});

std::vector<CellFunctor<HCategory>> cell_functors(const HCategory& h) {
  using K = CellFunctor<HCategory>::Kind;
  return {{identity_lax(h), K::strict},
          {substitution_functor(h, w), K::strict},
          {pad_functor(h), K::strong},
          {mirror_functor(h), K::strong}};
}

Outcome h_laws() {
  const auto t0 = Clock::now();
  const auto r = h_law_suite(4, 3, Execution::parallel);
  const auto t = seconds_since(t0);
  bool every_law_ran = true;
  for (const auto& law : r.laws) every_law_ran = every_law_ran && law.tally.checked > 0;
  return {r.passed() && every_law_ran && t < 10,
          "width<=4, " + std::to_string(r.checked()) + " checks, " + fmt(t)};
}

Outcome y_laws() {
  const auto t0 = Clock::now();
  const auto r = y_law_suite(3, 4, Faults{}, Execution::parallel);
  const auto t = seconds_since(t0);
  return {r.passed() && t < 10, "arity<=3 width<=4, " + std::to_string(r.checked()) + " checks, " + fmt(t)};
}

Outcome u_laws() {
  const HCategory h;
  const auto gens = HCategory::objects_up_to_width(2);
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  bool ok = true;
  for (const auto& family : {default_kappa_family<ZObject>(), exotic_kappa_family()}) {
    const auto r = multicat_law_suite("U", U(h, family), gens, MulticatBounds{4, 0, 0}, Execution::parallel);
    ok = ok && r.passed();
    checked += r.checked();
  }
  const auto t = seconds_since(t0);
  return {ok && t < 60, "default+exotic, tuples<=4, " + std::to_string(checked) + " checks, " + fmt(t)};
}

Outcome kappa_isos() {
  const HCategory h;
  std::vector<std::pair<std::string, U>> families{{"default", U(h, default_kappa_family<ZObject>())},
                                                  {"exotic", U(h, exotic_kappa_family())},
                                                  {"right_nested", U(h, right_nested_kappa_family<ZObject>())}};
  const auto t0 = Clock::now();
  const auto r = kappa_iso_suite("iso", families, HCategory::objects_up_to_width(2), 4, Execution::parallel);
  const auto t = seconds_since(t0);
  return {r.passed() && t < 30, "3 families, tuples<=4, " + std::to_string(r.checked()) + " checks, " + fmt(t)};
}

Outcome round_trips() {
  const HCategory h;
  const U u(h, default_kappa_family<ZObject>());
  const auto objects = HCategory::objects_up_to_width(2);
  std::size_t checked = 0;
  bool ok = true;
  for (const auto& cell : cell_functors(h)) {
    const auto& F = cell.functor;
    const auto trip = round_trip_suite(F, u, objects, 3, Execution::parallel);
    // The extracted (η, ξ) must satisfy the coherence diagrams on its own.
    const auto extracted = multifunctor_to_lax(lax_to_multifunctor(F, u, u, objects), u, u);
    const auto coherent = lax_coherence_suite(extracted, objects, Execution::parallel);
    ok = ok && trip.passed() && coherent.passed();
    checked += trip.checked() + coherent.checked();
  }
  return {ok, "identity, subst, pad, mirror; " + std::to_string(checked) + " checks"};
}

Outcome xi_lemmas() {
  const HCategory h;
  auto cells = cell_functors(h);
  std::size_t checked = 0;
  bool ok = true;
  for (const auto& cell : cells) {
    const auto r = xi_lemma_suite(cell.functor, HCategory::objects_up_to_width(1), 4, 3, Execution::parallel);
    ok = ok && r.passed();
    checked += r.checked();
  }
  return {ok, "j<=4 n<=3, " + std::to_string(checked) + " checks"};
}

Outcome adjunction() {
  const HCategory h;
  const auto t0 = Clock::now();
  const auto r = adjunction_suite("adjunction", h, HCategory::objects_up_to_width(2), {e, a, b}, cell_functors(h),
                                  AdjunctionBounds{3, 3, 2, 2}, Faults{}, Execution::parallel);
  const auto t = seconds_since(t0);
  bool every_law_ran = true;
  for (const auto& law : r.laws) every_law_ran = every_law_ran && law.tally.checked > 0;
  return {r.passed() && every_law_ran && t < 60,
          "tuples<=3 lists<=3, " + std::to_string(r.checked()) + " checks, " + fmt(t)};
}

Outcome mutations() {
  const HCategory h;
  Faults no_phi, no_sigma, no_block;
  no_phi.drop_phi = true;
  no_sigma.drop_sigma_f = true;
  no_block.drop_block_perm = true;
  const auto r_phi = multicat_law_suite("U", U(h, exotic_kappa_family(), no_phi), HCategory::objects_up_to_width(2),
                                        MulticatBounds{3, 0, 0}, Execution::parallel);
  const auto r_sigma = adjunction_suite("adjunction", h, HCategory::objects_up_to_width(1), {e, a, b},
                                        cell_functors(h), AdjunctionBounds{}, no_sigma, Execution::parallel);
  const auto r_block = y_law_suite(3, 4, no_block, Execution::parallel);
  const bool ok = has_counterexample(r_phi) && has_counterexample(r_sigma) && has_counterexample(r_block);
  return {ok, "drop-phi→" + failing_laws(r_phi) + "; drop-sigma-f→" + failing_laws(r_sigma) +
                  "; drop-block-perm→" + failing_laws(r_block)};
}

int run(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome cli_contract(const std::string& cli) {
  if (cli.empty()) return {false, "no CLI path given"};
  const auto dir = std::filesystem::temp_directory_path() / ("opal_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto out1 = dir / "run1.json", out2 = dir / "run2.json";
  const std::string env = "env -u OPAL_SUITE_CONFIG ";
  const int pass1 = run(env + cli + " verify --json --seed 11 > " + out1.string() + " 2>&1");
  const int pass2 = run(env + cli + " verify --json --seed 11 > " + out2.string() + " 2>&1");
  const int mutated = run(env + cli + " verify --mutate drop-phi > /dev/null 2>&1");
  const int malformed = run(env + cli + " verify --max-width notanumber > /dev/null 2>&1");
  const bool same = slurp(out1) == slurp(out2) && !slurp(out1).empty();
  std::filesystem::remove_all(dir);
  const bool ok = pass1 == 0 && pass2 == 0 && mutated == 1 && malformed == 2 && same;
  return {ok, "verify=" + std::to_string(pass1) + " mutated=" + std::to_string(mutated) +
                  " malformed=" + std::to_string(malformed) + " identical_reports=" + (same ? "yes" : "no")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"H symmetric monoidal laws", h_laws},
      {"Y operad laws and equivariance", y_laws},
      {"U_kappa H multicategory laws", u_laws},
      {"kappa comparison isomorphisms", kappa_isos},
      {"lax functor / multifunctor round trips", round_trips},
      {"xi-tower lemmas", xi_lemmas},
      {"L -| U adjunction", adjunction},
      {"mutation sensitivity", mutations},
      {"CLI contract", [&] { return cli_contract(cli); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o = {false, std::string("threw: ") + ex.what()};
    }
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << " (" << o.detail << ")"
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
