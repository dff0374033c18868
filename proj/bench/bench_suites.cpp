// Serial reference against the OpenMP kernel for the heaviest suites.  On a
// machine with one hardware thread the two should be within noise of each
// other; the parallel run pays only for the chunk bookkeeping.

#include <benchmark/benchmark.h>

#include "opal/adjunction.hpp"
#include "opal/core_suites.hpp"
#include "opal/h_functors.hpp"
#include "opal/iso_suite.hpp"

namespace {

using opal::Execution;
using opal::HCategory;
using opal::ZObject;
using U = opal::Underlying<HCategory>;

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state, std::size_t checked) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
  state.counters["checks"] = static_cast<double>(checked);
  state.counters["checks_per_s"] =
      benchmark::Counter(static_cast<double>(checked), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_HLaws(benchmark::State& state) {
  std::size_t checked = 0;
  for (auto _ : state) checked = opal::h_law_suite(4, 3, mode(state)).checked();
  label(state, checked);
}

void BM_YLaws(benchmark::State& state) {
  std::size_t checked = 0;
  for (auto _ : state) checked = opal::y_law_suite(3, 4, opal::Faults{}, mode(state)).checked();
  label(state, checked);
}

void BM_UKappaH(benchmark::State& state) {
  const HCategory h;
  std::size_t checked = 0;
  for (auto _ : state) {
    // A fresh multicategory each time so memoised structure maps do not
    // carry over between iterations.
    const U u(h, opal::exotic_kappa_family());
    checked = opal::multicat_law_suite("exotic", u, HCategory::objects_up_to_width(2), opal::MulticatBounds{3, 0, 0},
                                       mode(state))
                  .checked();
  }
  label(state, checked);
}

void BM_KappaComparison(benchmark::State& state) {
  const HCategory h;
  std::size_t checked = 0;
  for (auto _ : state) {
    std::vector<std::pair<std::string, U>> families{{"default", U(h, opal::default_kappa_family<ZObject>())},
                                                    {"exotic", U(h, opal::exotic_kappa_family())},
                                                    {"right", U(h, opal::right_nested_kappa_family<ZObject>())}};
    checked = opal::kappa_iso_suite("iso", families, HCategory::objects_up_to_width(2), 3, mode(state)).checked();
  }
  label(state, checked);
}

void BM_Adjunction(benchmark::State& state) {
  const HCategory h;
  using K = opal::CellFunctor<HCategory>::Kind;
  const std::vector<opal::CellFunctor<HCategory>> functors{{opal::identity_lax(h), K::strict},
                                                           {opal::pad_functor(h), K::strong},
                                                           {opal::mirror_functor(h), K::strong}};
  const ZObject e, a(opal::Paren::leaf(), {1}), b(opal::Paren::node(opal::Paren::leaf(), opal::Paren::leaf()), {1, 2});
  std::size_t checked = 0;
  for (auto _ : state)
    checked = opal::adjunction_suite("adj", h, HCategory::objects_up_to_width(2), {e, a, b}, functors,
                                     opal::AdjunctionBounds{}, opal::Faults{}, mode(state))
                  .checked();
  label(state, checked);
}

}  // namespace

BENCHMARK(BM_HLaws)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_YLaws)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UKappaH)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KappaComparison)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Adjunction)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
