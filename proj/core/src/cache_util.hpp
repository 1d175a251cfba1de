#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "mzv/nc_poly.hpp"

namespace mzv::detail {

struct PairHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p)
      const noexcept {
    // splitmix-style mix of the two keys
    std::uint64_t h = p.first * 0x9e3779b97f4a7c15ull ^ p.second;
    h ^= h >> 30;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 27;
    return static_cast<std::size_t>(h);
  }
};

using WordCache = std::unordered_map<std::uint64_t, NcPoly>;
using PairCache =
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, NcPoly,
                       PairHash>;

// Lookup-or-compute with the lock dropped during compute so recursive
// compute() calls can re-enter; a racing duplicate insert is benign.
template <typename Cache, typename Key, typename Compute>
typename Cache::mapped_type cached(Cache& cache, std::mutex& mu,
                                   const Key& key, Compute&& compute) {
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  typename Cache::mapped_type value = compute();
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(value)).first->second;
}

}  // namespace mzv::detail
