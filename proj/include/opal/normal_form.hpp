#pragma once

#include <memory>
#include <string>
#include <vector>

#include "opal/operad_y.hpp"

namespace opal {

/// A formal tensor expression over variables 0..n-1 and the unit.  Immutable;
/// subterms are shared.
class Term {
public:
  enum class Kind { unit, var, pair };

  static Term unit();
  static Term var(std::size_t index);
  static Term pair(const Term& left, const Term& right);

  Kind kind() const noexcept { return node_->kind; }
  bool is_unit() const noexcept { return kind() == Kind::unit; }
  bool is_var() const noexcept { return kind() == Kind::var; }
  bool is_pair() const noexcept { return kind() == Kind::pair; }
  std::size_t index() const noexcept { return node_->index; }
  const Term& left() const { return *node_->left; }
  const Term& right() const { return *node_->right; }

  friend bool operator==(const Term& a, const Term& b);

private:
  struct Node {
    Kind kind;
    std::size_t index = 0;
    std::unique_ptr<Term> left, right;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const Term& t);

/// The expression y denotes when applied to n variables: marked slot k holds
/// variable sigma⁻¹(k), unmarked leaves hold the unit.
Term term_of(const YObject& y);

/// ((v0⊕v1)⊕v2)⊕…, v0 alone for n = 1, the unit for n = 0.
Term left_nested_term(std::size_t n);

/// One structural move applied at the subterm reached by `path`
/// (false = left child, true = right child).
enum class Move {
  assoc_lr,      // (A⊕B)⊕C → A⊕(B⊕C)
  assoc_rl,      // A⊕(B⊕C) → (A⊕B)⊕C
  unit_r,        // A⊕e → A
  unit_r_inv,    // A → A⊕e
  unit_l,        // e⊕A → A, realised as c∘τ
  unit_l_inv,    // A → e⊕A, realised as τ∘c⁻¹
  braid,         // A⊕B → B⊕A
};

struct Step {
  std::vector<bool> path;
  Move move;
};

Move inverse(Move m);
Term apply_step(const Term& t, const Step& s);
const Term& subterm(const Term& t, const std::vector<bool>& path);

/// A sequence of moves from `start`; terms()[i] is the term before steps[i],
/// terms().back() the final term.
class Rewrite {
public:
  explicit Rewrite(Term start) : terms_{std::move(start)} {}
  void push(Step s);
  const std::vector<Step>& steps() const noexcept { return steps_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& start() const { return terms_.front(); }
  const Term& end() const { return terms_.back(); }
  /// The same path traversed backwards.
  Rewrite reversed() const;
  /// This rewrite followed by `next` (whose start must equal end()).
  Rewrite then(const Rewrite& next) const;

private:
  std::vector<Step> steps_;
  std::vector<Term> terms_;
};

/// Rewrites `t` (whose variables must be exactly 0..n-1, each once) to
/// left_nested_term(n): units are removed bottom-up, products are flattened
/// to the left, and variables are sorted by adjacent transpositions.
Rewrite normalize(const Term& t);

/// The rewrite a → normal form → b.  Both terms must use the same variables.
Rewrite coherence_path(const Term& a, const Term& b);

}  // namespace opal
