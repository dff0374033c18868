#pragma once

#include <string>
#include <vector>

namespace opal {

// Deliberate defects that can be switched on to show the law suites are not
// vacuous.  A default-constructed value is the correct build.
struct Faults {
  bool drop_phi = false;         // Γ skips its φ(y,⟨x_s⟩) precomposition
  bool drop_sigma_f = false;     // ε uses the identity in place of σ_f
  bool drop_block_perm = false;  // γ_Y assembles its permutation without σ⟨j_1,…,j_n⟩

  bool any() const noexcept { return drop_phi || drop_sigma_f || drop_block_perm; }
  friend bool operator==(const Faults&, const Faults&) = default;
};

/// Parses "drop-phi", "drop-sigma-f", "drop-block-perm"; returns false on an
/// unknown name.
bool enable_fault(Faults& faults, const std::string& name);
std::vector<std::string> fault_names(const Faults& faults);

}  // namespace opal
