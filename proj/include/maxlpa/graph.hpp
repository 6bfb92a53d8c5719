#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace maxlpa {

using NodeId = std::uint32_t;
using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Neighbor lists are strictly ascending, symmetric and loop-free. Node ids
/// are dense and 0-indexed. Connectivity is not required.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on n nodes from undirected edges given in either
  /// orientation. Throws InvalidParameter on self-loops, repeated edges or
  /// endpoints >= n.
  static Graph from_edges(std::size_t n, const EdgeList& edges);

  std::size_t num_nodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  bool has_edge(NodeId u, NodeId v) const noexcept;

  /// Edges as (u, v) with u < v in lexicographic order.
  EdgeList edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

/// Ground truth of a clustered random graph: block membership per node,
/// one intra-block edge probability per block and a shared inter-block
/// probability.
struct PlantedModel {
  std::vector<std::uint32_t> block_of;
  std::vector<double> intra_probs;
  double inter_prob = 0.0;

  std::size_t num_nodes() const noexcept { return block_of.size(); }
  std::size_t num_blocks() const noexcept { return intra_probs.size(); }
  std::vector<std::size_t> block_sizes() const;
  /// Members of each block, ascending.
  std::vector<std::vector<NodeId>> blocks() const;

  /// Throws InvalidParameter unless every node has a block < k, every block
  /// is non-empty, all probabilities lie in [0, 1] and inter_prob < min p_i.
  void validate() const;

  /// k contiguous blocks whose sizes differ by at most one, all sharing
  /// intra-probability p.
  static PlantedModel equal_blocks(std::size_t n, std::size_t k, double p, double inter_prob);
};

/// Independent seed streams for graph sampling and initial labels.
struct Seed {
  std::uint64_t graph_seed = 0;
  std::uint64_t label_seed = 0;

  bool operator==(const Seed&) const = default;
};

}  // namespace maxlpa
