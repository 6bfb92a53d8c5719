#include "maxlpa/components.hpp"

#include <limits>
#include <numeric>
#include <utility>

namespace maxlpa {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), NodeId{0});
}

NodeId DisjointSets::find(NodeId x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(NodeId a, NodeId b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --sets_;
  return true;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  const std::size_t n = g.num_nodes();
  DisjointSets sets(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v) sets.unite(u, v);
    }
  }

  constexpr std::size_t kUnassigned = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index_of_root(n, kUnassigned);
  std::vector<std::vector<NodeId>> out;
  out.reserve(sets.num_sets());
  for (NodeId v = 0; v < n; ++v) {
    NodeId root = sets.find(v);
    if (index_of_root[root] == kUnassigned) {
      index_of_root[root] = out.size();
      out.emplace_back();
    }
    out[index_of_root[root]].push_back(v);
  }
  return out;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n <= 1) return true;
  DisjointSets sets(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v && sets.unite(u, v) && sets.num_sets() == 1) return true;
    }
  }
  return sets.num_sets() == 1;
}

}  // namespace maxlpa
