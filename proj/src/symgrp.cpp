#include "opal/symgrp.hpp"

#include <algorithm>
#include <numeric>

namespace opal {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const auto n = images_.size();
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v - 1)])
      throw StructuralError("Permutation: images " + to_string(*this) + " are not a bijection");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(std::size_t n, int i, int j) {
  auto p = identity(n);
  if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n)
    throw StructuralError("transposition: index out of range");
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<Permutation> out;
  auto p = identity(n);
  auto images = p.images_;
  do {
    Permutation q;
    q.images_ = images;
    out.push_back(std::move(q));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree())
    throw StructuralError("compose: degrees " + std::to_string(s.degree()) + " and " +
                          std::to_string(t.degree()) + " differ");
  std::vector<int> images(s.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = s(t.images()[i]);
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& s) {
  std::vector<int> images(s.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[static_cast<std::size_t>(s.images()[i] - 1)] = static_cast<int>(i + 1);
  return Permutation(std::move(images));
}

Permutation block_sum(std::span<const Permutation> parts) {
  std::vector<int> images;
  int offset = 0;
  for (const auto& p : parts) {
    for (int v : p.images()) images.push_back(v + offset);
    offset += static_cast<int>(p.degree());
  }
  return Permutation(std::move(images));
}

Permutation block_perm(const Permutation& s, std::span<const std::size_t> sizes) {
  const auto n = s.degree();
  if (sizes.size() != n)
    throw StructuralError("block_perm: " + std::to_string(sizes.size()) + " block sizes for degree " +
                          std::to_string(n));
  // Target block at position p holds source block s⁻¹(p).
  const auto inv = inverse(s);
  std::vector<std::size_t> target_start(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p)
    target_start[p + 1] = target_start[p] + sizes[static_cast<std::size_t>(inv.images()[p] - 1)];

  std::vector<int> images;
  images.reserve(target_start[n]);
  for (std::size_t i = 0; i < n; ++i) {
    const auto base = target_start[static_cast<std::size_t>(s.images()[i] - 1)];
    for (std::size_t o = 0; o < sizes[i]; ++o) images.push_back(static_cast<int>(base + o + 1));
  }
  return Permutation(std::move(images));
}

Permutation block_transposition(std::size_t n, std::size_t m) {
  const std::size_t sizes[] = {n, m};
  return block_perm(Permutation{2, 1}, sizes);
}

std::string to_string(const Permutation& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.images().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.images()[i]);
  }
  return out + "]";
}

}  // namespace opal
