#include "maxlpa/graph.hpp"

#include <algorithm>
#include <string>

#include "maxlpa/errors.hpp"

namespace maxlpa {

Graph Graph::from_edges(std::size_t n, const EdgeList& edges) {
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidParameter("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (u == v) {
      throw InvalidParameter("self-loop on node " + std::to_string(u));
    }
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    g.offsets_[i + 1] += g.offsets_[i];
  }

  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }

  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw InvalidParameter("duplicate edge (" + std::to_string(std::min<std::size_t>(v, *dup)) +
                             ", " + std::to_string(std::max<std::size_t>(v, *dup)) + ")");
    }
  }
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> PlantedModel::block_sizes() const {
  std::vector<std::size_t> sizes(num_blocks(), 0);
  for (auto b : block_of) {
    if (b < sizes.size()) ++sizes[b];
  }
  return sizes;
}

std::vector<std::vector<NodeId>> PlantedModel::blocks() const {
  std::vector<std::vector<NodeId>> out(num_blocks());
  for (NodeId v = 0; v < block_of.size(); ++v) {
    if (block_of[v] < out.size()) out[block_of[v]].push_back(v);
  }
  return out;
}

void PlantedModel::validate() const {
  if (block_of.empty()) throw InvalidParameter("planted model has no nodes");
  if (intra_probs.empty()) throw InvalidParameter("planted model has no blocks");
  for (std::size_t v = 0; v < block_of.size(); ++v) {
    if (block_of[v] >= num_blocks()) {
      throw InvalidParameter("node " + std::to_string(v) + " assigned to block " +
                             std::to_string(block_of[v]) + " but k = " +
                             std::to_string(num_blocks()));
    }
  }
  auto sizes = block_sizes();
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    if (sizes[b] == 0) throw InvalidParameter("block " + std::to_string(b) + " is empty");
  }
  for (double p : intra_probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvalidParameter("intra-block probability " + std::to_string(p) + " outside [0, 1]");
    }
  }
  if (!(inter_prob >= 0.0 && inter_prob <= 1.0)) {
    throw InvalidParameter("inter-block probability " + std::to_string(inter_prob) +
                           " outside [0, 1]");
  }
  double min_intra = *std::min_element(intra_probs.begin(), intra_probs.end());
  if (!(inter_prob < min_intra)) {
    throw InvalidParameter("inter-block probability must be below every intra-block probability");
  }
}

PlantedModel PlantedModel::equal_blocks(std::size_t n, std::size_t k, double p, double inter_prob) {
  if (k == 0 || k > n) {
    throw InvalidParameter("need 1 <= k <= n blocks, got k = " + std::to_string(k));
  }
  PlantedModel model;
  model.block_of.resize(n);
  std::size_t base = n / k;
  std::size_t extra = n % k;
  NodeId v = 0;
  for (std::uint32_t b = 0; b < k; ++b) {
    std::size_t size = base + (b < extra ? 1 : 0);
    for (std::size_t i = 0; i < size; ++i) model.block_of[v++] = b;
  }
  model.intra_probs.assign(k, p);
  model.inter_prob = inter_prob;
  return model;
}

}  // namespace maxlpa
