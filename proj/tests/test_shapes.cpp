#include <set>
#include <string>

#include "doctest.h"
#include "opal/error.hpp"
#include "opal/shapes.hpp"

using opal::Paren;
using opal::ZObject;

namespace {

std::size_t catalan(std::size_t n) {
  // C_n = binom(2n, n) / (n+1), by the product formula.
  std::size_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// Render with 'm' for marked leaves and 'u' for the rest.
std::string render(const Paren& p, const opal::SlotSet& marks, int& leaf) {
  if (p.is_leaf()) return marks.contains(++leaf) ? "m" : "u";
  auto l = render(p.left(), marks, leaf);
  auto r = render(p.right(), marks, leaf);
  return "(" + l + " " + r + ")";
}

std::string render(const ZObject& z) {
  int leaf = 0;
  return render(z.tree(), z.marks(), leaf);
}

// Textual substitution: the i-th 'm' becomes the rendering of parts[i].
std::string substitute(const ZObject& b, const std::vector<ZObject>& parts) {
  std::string out;
  std::size_t next = 0;
  for (char ch : render(b)) {
    if (ch == 'm') out += render(parts[next++]);
    else out += ch;
  }
  return out;
}

std::vector<ZObject> objects_up_to(std::size_t width, std::size_t arity) {
  std::vector<ZObject> out;
  for (std::size_t w = 1; w <= width; ++w)
    for (auto& z : ZObject::all_of_width(w, arity)) out.push_back(z);
  return out;
}

}  // namespace

TEST_CASE("enumerate_parens counts are Catalan numbers") {
  CHECK(opal::enumerate_parens(0).empty());
  CHECK(opal::enumerate_parens(1).size() == 1);
  CHECK(opal::enumerate_parens(2).size() == 1);
  CHECK(opal::enumerate_parens(4).size() == 5);
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto trees = opal::enumerate_parens(k);
    REQUIRE(trees.size() == catalan(k - 1));
    std::set<Paren> unique(trees.begin(), trees.end());
    CHECK(unique.size() == trees.size());
    for (const auto& t : trees) CHECK(t.leaf_count() == k);
  }
}

TEST_CASE("Paren structure") {
  const auto t = Paren::node(Paren::node(Paren::leaf(), Paren::leaf()), Paren::leaf());
  CHECK(t == Paren::left_comb(3));
  CHECK(t.left() == Paren::node(Paren::leaf(), Paren::leaf()));
  CHECK(t.right().is_leaf());
  CHECK(Paren::right_comb(3) == Paren::node(Paren::leaf(), Paren::node(Paren::leaf(), Paren::leaf())));
  CHECK(opal::to_string(t) == "((*,*),*)");
}

TEST_CASE("SlotSet") {
  CHECK(opal::SlotSet::all(2, 4).size() == 6);
  CHECK(opal::SlotSet::all(0, 3).size() == 1);
  CHECK_THROWS_AS(opal::SlotSet({2, 1}, 3), opal::StructuralError);
  CHECK_THROWS_AS(opal::SlotSet({4}, 3), opal::StructuralError);
}

TEST_CASE("tensor_z") {
  const ZObject x(Paren::leaf(), {1});
  const auto xx = tensor_z(x, x);
  CHECK(xx == ZObject(Paren::node(Paren::leaf(), Paren::leaf()), {1, 2}));
  const auto with_unit = tensor_z(xx, ZObject());
  CHECK(with_unit.marks().elements() == xx.marks().elements());
  CHECK(with_unit.width() == xx.width() + 1);
  CHECK(with_unit.arity() == 2);
}

TEST_CASE("gamma_z bookkeeping") {
  const ZObject b(Paren::left_comb(3), {1, 3});
  const ZObject p1(Paren::leaf(), {1});
  const ZObject p2(Paren::left_comb(2), {2});
  const auto g = gamma_z(b, std::vector{p1, p2});
  CHECK(g.width() == 4);
  CHECK(g.arity() == 2);
  CHECK(g == ZObject(Paren::node(Paren::node(Paren::leaf(), Paren::leaf()), Paren::left_comb(2)), {1, 4}));
  CHECK_THROWS_AS(gamma_z(b, std::vector{p1}), opal::StructuralError);
}

TEST_CASE("gamma_z agrees with textual substitution") {
  const auto bases = objects_up_to(3, 2);
  const auto parts = [] {
    std::vector<ZObject> out;
    for (std::size_t a = 0; a <= 2; ++a)
      for (auto& z : objects_up_to(2, a)) out.push_back(z);
    return out;
  }();
  for (const auto& b : bases)
    for (const auto& p : parts)
      for (const auto& q : parts) {
        const std::vector<ZObject> ps{p, q};
        const auto g = gamma_z(b, ps);
        REQUIRE(render(g) == substitute(b, ps));
        REQUIRE(g.width() == b.width() - 2 + p.width() + q.width());
        REQUIRE(g.arity() == p.arity() + q.arity());
      }
}

TEST_CASE("gamma_z is unital and associative") {
  const ZObject one(Paren::leaf(), {1});
  for (std::size_t a = 0; a <= 3; ++a)
    for (const auto& z : objects_up_to(4, a)) {
      REQUIRE(gamma_z(one, std::vector{z}) == z);
      REQUIRE(gamma_z(z, std::vector<ZObject>(a, one)) == z);
    }

  // γ(γ(b; c_1,c_2); d⃗) = γ(b; γ(c_1; d⃗_1), γ(c_2; d⃗_2)) with small parts.
  const auto bs = objects_up_to(3, 2);
  std::vector<ZObject> cs;
  for (std::size_t a = 0; a <= 2; ++a)
    for (auto& z : objects_up_to(2, a)) cs.push_back(z);
  const std::vector<ZObject> ds{ZObject(), one, ZObject(Paren::left_comb(2), {2})};
  for (const auto& b : bs)
    for (const auto& c1 : cs)
      for (const auto& c2 : cs) {
        std::vector<ZObject> d1(c1.arity(), ds[2]), d2(c2.arity(), ds[0]);
        if (!d1.empty()) d1.front() = ds[1];
        std::vector<ZObject> all = d1;
        all.insert(all.end(), d2.begin(), d2.end());
        const auto lhs = gamma_z(gamma_z(b, std::vector{c1, c2}), all);
        const auto rhs = gamma_z(b, std::vector{gamma_z(c1, d1), gamma_z(c2, d2)});
        REQUIRE(lhs == rhs);
      }
}

TEST_CASE("gamma_z interchanges with tensor_z") {
  const ZObject m(Paren::node(Paren::leaf(), Paren::leaf()), {1, 2});
  for (const auto& a : objects_up_to(2, 1))
    for (const auto& b : objects_up_to(3, 1))
      REQUIRE(gamma_z(m, std::vector{a, b}) == tensor_z(a, b));
}

TEST_CASE("width-4 object count") {
  std::size_t total = 0;
  for (std::size_t w = 1; w <= 4; ++w) total += ZObject::all_of_width(w).size();
  // Σ_w |V(w)|·2^w = 2 + 4 + 16 + 80
  CHECK(total == 102);
}
