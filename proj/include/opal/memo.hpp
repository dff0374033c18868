#pragma once

#include <array>
#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace opal {

template <class T>
concept Hashable = requires(const T& x) {
  { std::hash<T>{}(x) } -> std::convertible_to<std::size_t>;
};

inline std::size_t hash_mix(std::size_t h, std::size_t v) noexcept {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

template <Hashable T>
std::size_t hash_range(const std::vector<T>& xs) noexcept {
  std::size_t h = xs.size();
  for (const auto& x : xs) h = hash_mix(h, std::hash<T>{}(x));
  return h;
}

/// A thread-safe memo table.  Lookups lock one of several shards; the value is
/// computed outside the lock, so two threads may race to compute the same
/// entry, which is harmless because values are pure functions of the key.
template <class Key, class Value, class Hash>
class Memo {
public:
  template <class Compute>
  Value get(const Key& key, Compute&& compute) {
    const auto h = Hash{}(key);
    auto& shard = shards_[h % shards_.size()];
    {
      std::lock_guard lock(shard.mu);
      if (auto it = shard.map.find(key); it != shard.map.end()) return it->second;
    }
    Value v = compute();
    std::lock_guard lock(shard.mu);
    shard.map.emplace(key, v);
    return v;
  }

private:
  struct Shard {
    std::mutex mu;
    std::unordered_map<Key, Value, Hash> map;
  };
  std::array<Shard, 16> shards_;
};

}  // namespace opal
