#pragma once

#include <stdexcept>
#include <string>

namespace opal {

// Raised when an operation is handed structurally incompatible data:
// mismatched degrees or arities, or morphisms whose endpoints do not meet.
class StructuralError : public std::invalid_argument {
public:
  explicit StructuralError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace opal
