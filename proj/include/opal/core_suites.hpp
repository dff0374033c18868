#pragma once

#include "opal/faults.hpp"
#include "opal/laws.hpp"

namespace opal {

/// The symmetric monoidal laws of H.  Coherence and naturality diagrams use
/// every tuple of H-objects whose widths sum to at most diagram_width;
/// category laws use all objects of width at most chain_width.  The report
/// carries one extra law: (1_m⊕τ⟨n,t⟩)∘(τ⟨n,m⟩⊕1_t) = τ⟨n,m+t⟩ at the levels
/// of every checked triple.
SuiteReport h_law_suite(std::size_t diagram_width, std::size_t chain_width, Execution ex);

/// The operad laws of Y: right action, γ associativity, both unit laws and
/// both equivariance formulas.  Every instance is a diagram all of whose
/// objects have arity at most max_arity and whose composite has width at most
/// max_width.
SuiteReport y_law_suite(std::size_t max_arity, std::size_t max_width, const Faults& faults, Execution ex);

}  // namespace opal
