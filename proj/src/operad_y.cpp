#include "opal/operad_y.hpp"

#include <deque>
#include <mutex>

#include "opal/error.hpp"

namespace opal {

bool enable_fault(Faults& faults, const std::string& name) {
  if (name == "drop-phi") faults.drop_phi = true;
  else if (name == "drop-sigma-f") faults.drop_sigma_f = true;
  else if (name == "drop-block-perm") faults.drop_block_perm = true;
  else return false;
  return true;
}

std::vector<std::string> fault_names(const Faults& faults) {
  std::vector<std::string> out;
  if (faults.drop_phi) out.emplace_back("drop-phi");
  if (faults.drop_sigma_f) out.emplace_back("drop-sigma-f");
  if (faults.drop_block_perm) out.emplace_back("drop-block-perm");
  return out;
}

YObject::YObject(ZObject z_, Permutation sigma_) : z(std::move(z_)), sigma(std::move(sigma_)) {
  if (sigma.degree() != z.arity())
    throw StructuralError("YObject: permutation degree " + std::to_string(sigma.degree()) +
                          " does not match arity " + std::to_string(z.arity()));
}

YMorphism::YMorphism(YObject s, YObject t) : source(std::move(s)), target(std::move(t)) {
  if (source.arity() != target.arity())
    throw StructuralError("YMorphism: arities " + std::to_string(source.arity()) + " and " +
                          std::to_string(target.arity()) + " differ");
}

const YGenerators& generators() {
  static const YGenerators g{
      YObject(ZObject(Paren::leaf(), {}), Permutation::identity(0)),
      YObject(ZObject(Paren::leaf(), {1}), Permutation::identity(1)),
      YObject(ZObject(Paren::node(Paren::leaf(), Paren::leaf()), {1, 2}), Permutation::identity(2)),
  };
  return g;
}

YObject gamma_y(const YObject& b, std::span<const YObject> parts, const Faults& faults) {
  const auto n = b.arity();
  if (parts.size() != n)
    throw StructuralError("gamma_y: " + std::to_string(parts.size()) + " parts for arity " +
                          std::to_string(n));
  // Slot k of b receives the part whose variable block is routed there.
  const auto inv = inverse(b.sigma);
  std::vector<ZObject> slotted;
  slotted.reserve(n);
  for (std::size_t k = 0; k < n; ++k) slotted.push_back(parts[static_cast<std::size_t>(inv.images()[k] - 1)].z);

  std::vector<std::size_t> arities;
  std::vector<Permutation> sigmas;
  arities.reserve(n);
  sigmas.reserve(n);
  for (const auto& p : parts) {
    arities.push_back(p.arity());
    sigmas.push_back(p.sigma);
  }
  auto inner = block_sum(sigmas);
  auto outer = faults.drop_block_perm ? Permutation::identity(inner.degree()) : block_perm(b.sigma, arities);
  return YObject(gamma_z(b.z, slotted), compose(outer, inner));
}

YObject act_y(const YObject& y, const Permutation& s) {
  if (s.degree() != y.arity())
    throw StructuralError("act_y: degree " + std::to_string(s.degree()) + " for arity " +
                          std::to_string(y.arity()));
  return YObject(y.z, compose(y.sigma, s));
}

namespace {

// κ tables grow on demand; deque keeps earlier references valid.
template <class Step>
const YObject& cached_kappa(std::deque<YObject>& cache, std::mutex& mu, std::size_t n, Step step) {
  std::lock_guard lock(mu);
  if (cache.empty()) {
    cache.push_back(generators().zero);
    cache.push_back(generators().one);
  }
  while (cache.size() <= n) cache.push_back(step(cache.back()));
  return cache[n];
}

}  // namespace

const YObject& default_kappa(std::size_t n) {
  static std::deque<YObject> cache;
  static std::mutex mu;
  return cached_kappa(cache, mu, n, [](const YObject& prev) {
    return gamma_y(generators().m, {prev, generators().one});
  });
}

const YObject& right_nested_kappa(std::size_t n) {
  static std::deque<YObject> cache;
  static std::mutex mu;
  return cached_kappa(cache, mu, n, [](const YObject& prev) {
    return gamma_y(generators().m, {generators().one, prev});
  });
}

ZObject exotic_beta(std::size_t n) {
  if (n == 0) return ZObject(Paren::leaf(), {});
  std::vector<int> marks;
  for (std::size_t i = 0; i < n; ++i) marks.push_back(static_cast<int>(i + 2));
  return ZObject(Paren::node(Paren::leaf(), Paren::right_comb(n)), std::move(marks));
}

std::vector<int> exotic_slot_indices(std::span<const std::size_t> widths) {
  std::vector<int> out;
  int next = 1;
  for (auto j : widths) {
    out.push_back(next);
    next += static_cast<int>(j);
  }
  return out;
}

YObject exotic_kappa(std::span<const ZObject> xs) {
  const auto n = xs.size();
  // Each input contributes its whole tree as a fully marked block.
  std::vector<ZObject> blocks;
  blocks.reserve(n);
  for (const auto& x : xs) {
    std::vector<int> all(x.width());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i + 1);
    blocks.emplace_back(x.tree(), std::move(all));
  }
  const auto delta = gamma_z(exotic_beta(n), blocks);

  // S counts among δ's marked leaves; translate to leaf positions in δ's tree.
  std::vector<std::size_t> widths;
  for (const auto& x : xs) widths.push_back(x.width());
  std::vector<int> marks;
  for (int s : exotic_slot_indices(widths)) marks.push_back(delta.marks().elements()[static_cast<std::size_t>(s - 1)]);

  Permutation sigma = Permutation::identity(n);
  if (n >= 2) {
    if (n % 2 == 1) sigma = Permutation::transposition(n, 1, 2);
    else sigma = Permutation::transposition(n, static_cast<int>(n - 1), static_cast<int>(n));
  }
  return YObject(ZObject(delta.tree(), std::move(marks)), std::move(sigma));
}

std::vector<YObject> all_y_objects(std::size_t arity, std::size_t width) {
  std::vector<YObject> out;
  const auto perms = Permutation::all(arity);
  for (const auto& z : ZObject::all_of_width(width, arity))
    for (const auto& p : perms) out.emplace_back(z, p);
  return out;
}

std::string to_string(const YObject& y) { return to_string(y.z) + to_string(y.sigma); }

}  // namespace opal
