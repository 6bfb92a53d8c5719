#pragma once

#include <cstddef>
#include <vector>

#include "maxlpa/graph.hpp"

namespace maxlpa {

// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  NodeId find(NodeId x);
  bool unite(NodeId a, NodeId b);
  std::size_t num_sets() const noexcept { return sets_; }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

/// Maximal connected node sets. Each set is ascending; sets are ordered by
/// their smallest node id.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace maxlpa
