#include "opal/normal_form.hpp"

#include <algorithm>

#include "opal/error.hpp"

namespace opal {

Term Term::unit() {
  static const Term u(std::make_shared<const Node>(Node{Kind::unit, 0, nullptr, nullptr}));
  return u;
}

Term Term::var(std::size_t index) {
  return Term(std::make_shared<const Node>(Node{Kind::var, index, nullptr, nullptr}));
}

Term Term::pair(const Term& left, const Term& right) {
  return Term(std::make_shared<const Node>(
      Node{Kind::pair, 0, std::make_unique<Term>(left), std::make_unique<Term>(right)}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::unit: return true;
    case Term::Kind::var: return a.index() == b.index();
    case Term::Kind::pair: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

std::string to_string(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::unit: return "e";
    case Term::Kind::var: return "x" + std::to_string(t.index() + 1);
    case Term::Kind::pair: return "(" + to_string(t.left()) + "+" + to_string(t.right()) + ")";
  }
  return {};
}

namespace {

Term term_of_tree(const Paren& p, const SlotSet& marks, const Permutation& inv, int& leaf, std::size_t& slot) {
  if (!p.is_leaf()) {
    auto l = term_of_tree(p.left(), marks, inv, leaf, slot);
    auto r = term_of_tree(p.right(), marks, inv, leaf, slot);
    return Term::pair(l, r);
  }
  ++leaf;
  if (!marks.contains(leaf)) return Term::unit();
  const int variable = inv.images()[slot++];
  return Term::var(static_cast<std::size_t>(variable - 1));
}

}  // namespace

Term term_of(const YObject& y) {
  int leaf = 0;
  std::size_t slot = 0;
  return term_of_tree(y.z.tree(), y.z.marks(), inverse(y.sigma), leaf, slot);
}

Term left_nested_term(std::size_t n) {
  if (n == 0) return Term::unit();
  auto t = Term::var(0);
  for (std::size_t i = 1; i < n; ++i) t = Term::pair(t, Term::var(i));
  return t;
}

Move inverse(Move m) {
  switch (m) {
    case Move::assoc_lr: return Move::assoc_rl;
    case Move::assoc_rl: return Move::assoc_lr;
    case Move::unit_r: return Move::unit_r_inv;
    case Move::unit_r_inv: return Move::unit_r;
    case Move::unit_l: return Move::unit_l_inv;
    case Move::unit_l_inv: return Move::unit_l;
    case Move::braid: return Move::braid;
  }
  return m;
}

const Term& subterm(const Term& t, const std::vector<bool>& path) {
  const Term* cur = &t;
  for (bool right : path) {
    if (!cur->is_pair()) throw StructuralError("subterm: path leaves the term");
    cur = right ? &cur->right() : &cur->left();
  }
  return *cur;
}

namespace {

Term apply_move(const Term& t, Move m) {
  auto need_pair = [](const Term& x) {
    if (!x.is_pair()) throw StructuralError("apply_step: move needs a product, got " + to_string(x));
  };
  switch (m) {
    case Move::assoc_lr:
      need_pair(t);
      need_pair(t.left());
      return Term::pair(t.left().left(), Term::pair(t.left().right(), t.right()));
    case Move::assoc_rl:
      need_pair(t);
      need_pair(t.right());
      return Term::pair(Term::pair(t.left(), t.right().left()), t.right().right());
    case Move::unit_r:
      need_pair(t);
      if (!t.right().is_unit()) throw StructuralError("apply_step: unit_r on " + to_string(t));
      return t.left();
    case Move::unit_r_inv: return Term::pair(t, Term::unit());
    case Move::unit_l:
      need_pair(t);
      if (!t.left().is_unit()) throw StructuralError("apply_step: unit_l on " + to_string(t));
      return t.right();
    case Move::unit_l_inv: return Term::pair(Term::unit(), t);
    case Move::braid:
      need_pair(t);
      return Term::pair(t.right(), t.left());
  }
  return t;
}

Term apply_at(const Term& t, const std::vector<bool>& path, std::size_t depth, Move m) {
  if (depth == path.size()) return apply_move(t, m);
  if (!t.is_pair()) throw StructuralError("apply_step: path leaves the term");
  if (path[depth]) return Term::pair(t.left(), apply_at(t.right(), path, depth + 1, m));
  return Term::pair(apply_at(t.left(), path, depth + 1, m), t.right());
}

}  // namespace

Term apply_step(const Term& t, const Step& s) { return apply_at(t, s.path, 0, s.move); }

void Rewrite::push(Step s) {
  terms_.push_back(apply_step(terms_.back(), s));
  steps_.push_back(std::move(s));
}

Rewrite Rewrite::reversed() const {
  Rewrite out(end());
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) out.push(Step{it->path, inverse(it->move)});
  return out;
}

Rewrite Rewrite::then(const Rewrite& next) const {
  if (!(next.start() == end())) throw StructuralError("Rewrite::then: endpoints do not meet");
  Rewrite out = *this;
  for (const auto& s : next.steps_) out.push(s);
  return out;
}

namespace {

std::vector<bool> extend(std::vector<bool> path, bool right) {
  path.push_back(right);
  return path;
}

class Normalizer {
public:
  explicit Normalizer(Term t) : rw_(std::move(t)) {}

  Rewrite run() {
    strip_units({});
    flatten({});
    sort_left_nested();
    return std::move(rw_);
  }

private:
  const Term& at(const std::vector<bool>& path) const { return subterm(rw_.end(), path); }

  void strip_units(const std::vector<bool>& path) {
    if (!at(path).is_pair()) return;
    strip_units(extend(path, false));
    strip_units(extend(path, true));
    const auto& t = at(path);
    if (t.right().is_unit()) rw_.push({path, Move::unit_r});
    else if (t.left().is_unit()) rw_.push({path, Move::unit_l});
  }

  void flatten(const std::vector<bool>& path) {
    if (!at(path).is_pair()) return;
    flatten(extend(path, false));
    flatten(extend(path, true));
    merge(path);
  }

  // Both children already left-nested: shift the right one across.
  void merge(const std::vector<bool>& path) {
    while (at(path).right().is_pair()) {
      rw_.push({path, Move::assoc_rl});
      merge(extend(path, false));
    }
  }

  void sort_left_nested() {
    std::vector<std::size_t> order;
    const Term* cur = &rw_.end();
    while (cur->is_pair()) {
      order.push_back(cur->right().index());
      cur = &cur->left();
    }
    if (cur->is_unit()) return;
    order.push_back(cur->index());
    std::reverse(order.begin(), order.end());
    const auto len = order.size();
    for (std::size_t pass = 0; pass < len; ++pass)
      for (std::size_t k = 0; k + 1 < len; ++k)
        if (order[k] > order[k + 1]) {
          swap_adjacent(k, len);
          std::swap(order[k], order[k + 1]);
        }
  }

  // Exchange entries k and k+1 of a left-nested product of length len.
  void swap_adjacent(std::size_t k, std::size_t len) {
    std::vector<bool> path(len - 2 - k, false);
    if (k == 0) {
      rw_.push({path, Move::braid});
      return;
    }
    rw_.push({path, Move::assoc_lr});
    rw_.push({extend(path, true), Move::braid});
    rw_.push({path, Move::assoc_rl});
  }

  Rewrite rw_;
};

std::size_t count_vars(const Term& t) {
  if (t.is_var()) return 1;
  if (t.is_unit()) return 0;
  return count_vars(t.left()) + count_vars(t.right());
}

}  // namespace

Rewrite normalize(const Term& t) {
  auto rw = Normalizer(t).run();
  if (!(rw.end() == left_nested_term(count_vars(t))))
    throw StructuralError("normalize: " + to_string(t) + " does not use variables 0..n-1 exactly once");
  return rw;
}

Rewrite coherence_path(const Term& a, const Term& b) {
  return normalize(a).then(normalize(b).reversed());
}

}  // namespace opal
