#pragma once

#include <array>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "critgen/graph.hpp"

namespace critgen {

/// Canonical graph6 line; equal keys iff isomorphic graphs.
struct CanonicalKey {
  std::string bytes;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalForm {
  CanonicalKey key;
  Graph graph;
  /// labeling[v] is the canonical label of vertex v of the input.
  std::vector<int> labeling;
};

CanonicalForm canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

/// Thread-safe set of canonical keys with linearizable check-and-insert.
class KeyStore {
 public:
  /// Returns true if the key was already present; it is present afterwards.
  bool seen_before(const CanonicalKey& key);
  bool contains(const CanonicalKey& key) const;
  std::size_t size() const;

 private:
  static constexpr std::size_t kShards = 64;

  struct Shard {
    mutable std::mutex mu;
    std::unordered_set<std::string> keys;
  };

  Shard& shard_for(const std::string& bytes) const;

  mutable std::array<Shard, kShards> shards_;
};

}  // namespace critgen
