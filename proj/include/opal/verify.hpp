#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "opal/faults.hpp"
#include "opal/json_io.hpp"
#include "opal/laws.hpp"
#include "opal/operad_y.hpp"

namespace opal {

/// A problem with the requested configuration (as opposed to a law failure).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SuiteConfig {
  std::size_t max_tuple_length = 4;
  std::size_t max_width = 3;
  std::size_t max_arity = 3;
  std::uint64_t seed = 7;
  // "default", "exotic" or "file:PATH"; empty means default and exotic.
  std::vector<std::string> kappas;
  Faults faults;

  json to_json() const;
};

/// Overlays the keys of a JSON config object (max_tuple_length, max_width,
/// max_arity, seed, kappa, mutate).  Unknown keys and ill-typed values are
/// ConfigErrors.
void apply_config_json(SuiteConfig& config, const json& j);

/// Checks the bounds and that every κ choice resolves.
void validate(const SuiteConfig& config);

struct NamedKappa {
  std::string name;
  KappaFamily<ZObject> family;
};

/// Resolves a κ choice.  A file holds {"name": …, "kappa": [y_0, y_1, …]}
/// with y_n a Y-object of arity n, used for every tuple of length n; it must
/// cover lengths up to max_length.
NamedKappa resolve_kappa(const std::string& choice, std::size_t max_length);

/// The width of the H-generators used for arrows of U_κH.
std::size_t generator_width(const SuiteConfig& config);

/// Every suite of the verification run, in order: H laws, Y laws, U_κH laws
/// for each κ, the κ-comparison triangle, the lax functor suites and round
/// trips, and the free permutative category with its adjunction.
std::vector<SuiteReport> run_verify(const SuiteConfig& config, Execution ex);

json verify_report(const SuiteConfig& config, const std::vector<SuiteReport>& reports);

}  // namespace opal
