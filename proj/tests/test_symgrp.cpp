#include <numeric>
#include <string>

#include "doctest.h"
#include "opal/symgrp.hpp"

using opal::Permutation;

namespace {

// Concatenate labelled blocks "b0","b1",... of the given sizes.
std::vector<std::string> labelled(const std::vector<std::size_t>& sizes) {
  std::vector<std::string> out;
  for (std::size_t b = 0; b < sizes.size(); ++b)
    for (std::size_t k = 0; k < sizes[b]; ++k) out.push_back(std::to_string(b) + "." + std::to_string(k));
  return out;
}

}  // namespace

TEST_CASE("compose follows (s∘t)(i) = s(t(i))") {
  const Permutation s{2, 1, 3}, t{1, 3, 2};
  CHECK(compose(s, t) == Permutation{2, 3, 1});
  CHECK(compose(Permutation::identity(3), s) == s);
  CHECK_THROWS_AS(compose(s, Permutation{2, 1}), opal::StructuralError);
}

TEST_CASE("inverse") {
  CHECK(inverse(Permutation{2, 3, 1}) == Permutation{3, 1, 2});
  CHECK(inverse(Permutation{2, 1}) == Permutation{2, 1});
  CHECK(inverse(Permutation::identity(4)) == Permutation::identity(4));
  for (const auto& s : Permutation::all(4)) CHECK(compose(s, inverse(s)).is_identity());
}

TEST_CASE("constructor rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({1, 1}), opal::StructuralError);
  CHECK_THROWS_AS(Permutation({0, 1}), opal::StructuralError);
  CHECK_THROWS_AS(Permutation({3, 1}), opal::StructuralError);
  CHECK(Permutation().degree() == 0);
}

TEST_CASE("act_inverse picks x_{s(i)}") {
  const std::vector<char> abc{'a', 'b', 'c'};
  CHECK(act_inverse(Permutation{2, 3, 1}, abc) == std::vector<char>{'b', 'c', 'a'});
  CHECK(act_inverse(Permutation{2, 1}, std::vector<char>{'a', 'b'}) == std::vector<char>{'b', 'a'});
  CHECK(act_inverse(Permutation::identity(3), abc) == abc);
  CHECK_THROWS_AS(act_inverse(Permutation{2, 1}, abc), opal::StructuralError);
}

TEST_CASE("act_inverse is a right action on Σ_4") {
  const std::vector<int> xs{10, 20, 30, 40};
  const auto all = Permutation::all(4);
  for (const auto& s : all)
    for (const auto& t : all) REQUIRE(act_inverse(compose(s, t), xs) == act_inverse(t, act_inverse(s, xs)));
}

TEST_CASE("Σ_n enumeration") {
  CHECK(Permutation::all(0).size() == 1);
  CHECK(Permutation::all(1).size() == 1);
  CHECK(Permutation::all(4).size() == 24);
  CHECK(Permutation::all(3).front().is_identity());
}

TEST_CASE("composition is associative with two-sided identity") {
  const auto all = Permutation::all(3);
  const auto e = Permutation::identity(3);
  for (const auto& s : all) {
    CHECK(compose(s, e) == s);
    CHECK(compose(e, s) == s);
    for (const auto& t : all)
      for (const auto& u : all) REQUIRE(compose(compose(s, t), u) == compose(s, compose(t, u)));
  }
}

TEST_CASE("block_sum") {
  CHECK(opal::block_sum(std::span<const Permutation>{}) == Permutation());
  CHECK(opal::block_sum({Permutation{2, 1}, Permutation::identity(1)}) == Permutation{2, 1, 3});
  CHECK(opal::block_sum({Permutation::identity(1), Permutation{2, 1}}) == Permutation{1, 3, 2});
  CHECK(opal::block_sum({Permutation::identity(2), Permutation::identity(3)}) == Permutation::identity(5));
  const auto s3 = Permutation::all(3);
  const auto s2 = Permutation::all(2);
  for (const auto& a : s2)
    for (const auto& b : s3)
      for (const auto& c : s2) {
        REQUIRE(opal::block_sum({opal::block_sum({a, b}), c}) == opal::block_sum({a, opal::block_sum({b, c})}));
        REQUIRE(opal::block_sum({a, Permutation()}) == a);
      }
}

TEST_CASE("block_perm moves block i to position s(i)") {
  CHECK(opal::block_perm(Permutation{2, 1}, {1, 2}) == Permutation{3, 1, 2});
  CHECK(opal::block_perm(Permutation::identity(3), {2, 0, 1}) == Permutation::identity(3));
  for (const auto& s : Permutation::all(3)) CHECK(opal::block_perm(s, {1, 1, 1}) == s);
  CHECK_THROWS_AS(opal::block_perm(Permutation{2, 1}, {1, 2, 3}), opal::StructuralError);

  // Oracle: as a left action on a concatenation, block_perm(s, sizes)
  // rearranges whole blocks exactly as s rearranges the block list.
  const std::vector<std::vector<std::size_t>> size_lists{{0, 1, 2}, {2, 2, 1}, {1, 0, 0}, {3, 1, 2}};
  for (const auto& sizes : size_lists)
    for (const auto& s : Permutation::all(3)) {
      const auto p = opal::block_perm(s, sizes);
      const auto w = labelled(sizes);
      const auto moved = act_inverse(inverse(p), w);
      std::vector<std::size_t> order(3);
      std::iota(order.begin(), order.end(), 0);
      const auto block_order = act_inverse(inverse(s), order);
      std::vector<std::string> expected;
      for (auto b : block_order)
        for (std::size_t k = 0; k < sizes[b]; ++k) expected.push_back(std::to_string(b) + "." + std::to_string(k));
      REQUIRE(moved == expected);
    }
}

TEST_CASE("block transpositions") {
  CHECK(opal::block_transposition(1, 2) == Permutation{3, 1, 2});
  CHECK(opal::block_transposition(1, 1) == Permutation{2, 1});
  CHECK(opal::block_transposition(0, 3) == Permutation::identity(3));
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::size_t m = 0; n + m <= 6; ++m)
      REQUIRE(compose(opal::block_transposition(n, m), opal::block_transposition(m, n)).is_identity());
  // (1_m ⊕ τ⟨n,t⟩)∘(τ⟨n,m⟩ ⊕ 1_t) = τ⟨n,m+t⟩
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m)
      for (std::size_t t = 0; t <= 3; ++t) {
        const auto lhs = compose(
            opal::block_sum({Permutation::identity(m), opal::block_transposition(n, t)}),
            opal::block_sum({opal::block_transposition(n, m), Permutation::identity(t)}));
        REQUIRE(lhs == opal::block_transposition(n, m + t));
      }
}

TEST_CASE("to_string") {
  CHECK(opal::to_string(Permutation{2, 1, 3}) == "[2,1,3]");
  CHECK(opal::to_string(Permutation()) == "[]");
}
