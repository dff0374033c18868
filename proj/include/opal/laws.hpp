#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opal/json_io.hpp"

namespace opal {

enum class Execution { serial, parallel };

/// The first failing instance of a law, in enumeration order.  Instances are
/// enumerated smallest first, so this is also a smallest failure.
struct Counterexample {
  json instance;
  json lhs;
  json rhs;
  std::string error;  // set when evaluating the diagram threw

  json to_json() const;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct LawTally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<Counterexample> first_failure;

  void absorb(LawTally&& later);
  friend bool operator==(const LawTally&, const LawTally&) = default;
};

/// Per-law tallies for one run of instances.
class Recorder {
public:
  explicit Recorder(std::size_t law_count) : tallies_(law_count) {}

  /// compute() returns the two sides of a diagram; describe() the instance,
  /// called only on failure.  A StructuralError while computing is a failure.
  template <class Compute, class Describe>
  bool check_equal(std::size_t law, Compute&& compute, Describe&& describe) {
    auto& t = tallies_.at(law);
    ++t.checked;
    try {
      const auto sides = compute();
      if (sides.first == sides.second) return true;
      fail(t, [&] { return Counterexample{describe(), json(sides.first), json(sides.second), {}}; });
    } catch (const std::invalid_argument& e) {
      fail(t, [&] { return Counterexample{describe(), nullptr, nullptr, e.what()}; });
    }
    return false;
  }

  /// Predicate form of check_equal.
  template <class Predicate, class Describe>
  bool check(std::size_t law, Predicate&& predicate, Describe&& describe) {
    auto& t = tallies_.at(law);
    ++t.checked;
    try {
      if (predicate()) return true;
      fail(t, [&] { return Counterexample{describe(), true, false, {}}; });
    } catch (const std::invalid_argument& e) {
      fail(t, [&] { return Counterexample{describe(), nullptr, nullptr, e.what()}; });
    }
    return false;
  }

  std::vector<LawTally>& tallies() noexcept { return tallies_; }

  void absorb(Recorder&& later);

private:
  template <class Make>
  static void fail(LawTally& t, Make&& make) {
    if (t.failed++ == 0) t.first_failure = make();
  }

  std::vector<LawTally> tallies_;
};

struct LawResult {
  std::string name;
  LawTally tally;
  bool passed() const noexcept { return tally.failed == 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<LawResult> laws;
  json parameters = json::object();

  bool passed() const;
  std::size_t checked() const;
  std::size_t failed() const;
  json to_json() const;
  friend bool operator==(const SuiteReport& a, const SuiteReport& b);
};

SuiteReport make_report(std::string suite, const std::vector<std::string>& law_names, Recorder&& rec);

/// Runs body(i, recorder) for i in [0, count), either serially or with
/// OpenMP, and merges the tallies in index order.  The merged result is the
/// same for both modes.
template <class Body>
Recorder run_instances(std::size_t law_count, std::size_t count, Body&& body, Execution ex) {
  constexpr std::size_t chunk = 16;
  const std::size_t chunks = (count + chunk - 1) / chunk;
  std::vector<Recorder> partial(chunks, Recorder(law_count));
  auto run_chunk = [&](std::size_t c) {
    const auto end = std::min(count, (c + 1) * chunk);
    for (std::size_t i = c * chunk; i < end; ++i) body(i, partial[c]);
  };
  if (ex == Execution::parallel) {
    const auto n = static_cast<long>(chunks);
#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < n; ++c) run_chunk(static_cast<std::size_t>(c));
  } else {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  }
  Recorder merged(law_count);
  for (auto& p : partial) merged.absorb(std::move(p));
  return merged;
}

/// Every length-`length` tuple over `pool` whose weights sum to at most
/// `budget`, in lexicographic order of pool indices.
template <class T, class Weight>
std::vector<std::vector<T>> weighted_tuples(const std::vector<T>& pool, std::size_t length, Weight&& weight,
                                            std::size_t budget) {
  std::vector<std::vector<T>> out;
  std::vector<T> cur;
  auto rec = [&](auto& self, std::size_t left) -> void {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (const auto& x : pool) {
      const std::size_t w = weight(x);
      if (w > left) continue;
      cur.push_back(x);
      self(self, left - w);
      cur.pop_back();
    }
  };
  rec(rec, budget);
  return out;
}

}  // namespace opal
