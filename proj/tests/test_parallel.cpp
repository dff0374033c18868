#include <omp.h>

#include "doctest.h"
#include "opal/adjunction.hpp"
#include "opal/core_suites.hpp"
#include "opal/h_functors.hpp"
#include "opal/iso_suite.hpp"

using opal::Execution;
using opal::HCategory;
using opal::ZObject;
using U = opal::Underlying<HCategory>;

namespace {

// Force several threads even on a single core so that chunks really finish
// out of order.
struct Threads {
  int saved = omp_get_max_threads();
  explicit Threads(int n) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
};

template <class Run>
void same_both_ways(Run run) {
  const Threads threads(4);
  const auto parallel = run(Execution::parallel);
  const auto serial = run(Execution::serial);
  CHECK(parallel.to_json().dump() == serial.to_json().dump());
}

}  // namespace

TEST_CASE("run_instances merges in index order") {
  const Threads threads(4);
  auto body = [](std::size_t i, opal::Recorder& r) {
    r.check_equal(0, [&] { return std::pair{i % 7, std::size_t{0}}; }, [&] { return opal::json(i); });
    r.check(1, [&] { return i != 123; }, [&] { return opal::json(i); });
  };
  auto parallel = opal::run_instances(2, 1000, body, Execution::parallel);
  auto serial = opal::run_instances(2, 1000, body, Execution::serial);
  const auto p = opal::make_report("p", {"a", "b"}, std::move(parallel));
  const auto s = opal::make_report("p", {"a", "b"}, std::move(serial));
  CHECK(p == s);
  // The first failure reported is the one with the smallest index.
  CHECK(p.to_json()["laws"]["a"]["counterexample"]["instance"] == 1);
  CHECK(p.to_json()["laws"]["b"]["counterexample"]["instance"] == 123);
  CHECK(p.laws[0].tally.failed == 1000 - 143);
}

TEST_CASE("suites give identical reports serially and in parallel") {
  const HCategory h;
  same_both_ways([](Execution ex) { return opal::h_law_suite(3, 2, ex); });
  opal::Faults broken;
  broken.drop_block_perm = true;
  same_both_ways([&](Execution ex) { return opal::y_law_suite(3, 3, broken, ex); });

  const U exotic(h, opal::exotic_kappa_family());
  same_both_ways([&](Execution ex) {
    return opal::multicat_law_suite("exotic", exotic, HCategory::objects_up_to_width(2),
                                    opal::MulticatBounds{3, 50, 11}, ex);
  });
  std::vector<std::pair<std::string, U>> families{{"default", U(h, opal::default_kappa_family<ZObject>())},
                                                  {"exotic", exotic}};
  same_both_ways([&](Execution ex) {
    return opal::kappa_iso_suite("iso", families, HCategory::objects_up_to_width(2), 2, ex);
  });

  using K = opal::CellFunctor<HCategory>::Kind;
  const std::vector<opal::CellFunctor<HCategory>> functors{{opal::identity_lax(h), K::strict},
                                                           {opal::pad_functor(h), K::strong}};
  opal::Faults no_sigma;
  no_sigma.drop_sigma_f = true;
  const ZObject e, a(opal::Paren::leaf(), {1});
  same_both_ways([&](Execution ex) {
    return opal::adjunction_suite("adj", h, HCategory::objects_up_to_width(1), {e, a}, functors,
                                  opal::AdjunctionBounds{}, no_sigma, ex);
  });
}
