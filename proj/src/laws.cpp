#include "opal/laws.hpp"

namespace opal {

json Counterexample::to_json() const {
  json j{{"instance", instance}};
  if (error.empty()) {
    j["lhs"] = lhs;
    j["rhs"] = rhs;
  } else {
    j["error"] = error;
  }
  return j;
}

void LawTally::absorb(LawTally&& later) {
  checked += later.checked;
  failed += later.failed;
  if (!first_failure && later.first_failure) first_failure = std::move(later.first_failure);
}

void Recorder::absorb(Recorder&& later) {
  for (std::size_t i = 0; i < tallies_.size(); ++i) tallies_[i].absorb(std::move(later.tallies_[i]));
}

bool SuiteReport::passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.passed(); });
}

std::size_t SuiteReport::checked() const {
  std::size_t n = 0;
  for (const auto& l : laws) n += l.tally.checked;
  return n;
}

std::size_t SuiteReport::failed() const {
  std::size_t n = 0;
  for (const auto& l : laws) n += l.tally.failed;
  return n;
}

json SuiteReport::to_json() const {
  json per_law = json::object();
  for (const auto& l : laws) {
    json entry{{"checked", l.tally.checked}, {"failed", l.tally.failed}};
    if (l.tally.first_failure) entry["counterexample"] = l.tally.first_failure->to_json();
    per_law[l.name] = std::move(entry);
  }
  return json{{"suite", suite},     {"passed", passed()}, {"checked", checked()},
              {"failed", failed()}, {"laws", per_law},    {"parameters", parameters}};
}

bool operator==(const SuiteReport& a, const SuiteReport& b) { return a.to_json() == b.to_json(); }

SuiteReport make_report(std::string suite, const std::vector<std::string>& law_names, Recorder&& rec) {
  SuiteReport r{std::move(suite), {}, json::object()};
  for (std::size_t i = 0; i < law_names.size(); ++i) r.laws.push_back({law_names[i], std::move(rec.tallies()[i])});
  return r;
}

}  // namespace opal
