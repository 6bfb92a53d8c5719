#include "maxlpa/generators.hpp"

#include <random>
#include <string>

#include "maxlpa/errors.hpp"

namespace maxlpa {
namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParameter(std::string(what) + " " + std::to_string(p) + " outside [0, 1]");
  }
}

// Calls emit(r) for each rank r in [0, total) that survives an independent
// Bernoulli(p) trial, in increasing order. Gaps between survivors are
// geometric, so the cost is proportional to the number of survivors.
template <typename Emit>
void sample_ranks(std::uint64_t total, double p, std::mt19937_64& rng, Emit&& emit) {
  if (total == 0 || p <= 0.0) return;
  if (p >= 1.0) {
    for (std::uint64_t r = 0; r < total; ++r) emit(r);
    return;
  }
  std::geometric_distribution<std::uint64_t> gap(p);
  std::uint64_t r = gap(rng);
  while (r < total) {
    emit(r);
    std::uint64_t skip = gap(rng);
    if (skip >= total - r - 1) break;
    r += 1 + skip;
  }
}

// Samples pairs {members[i], members[j]}, j < i, with probability p. Ranks
// enumerate (1,0), (2,0), (2,1), (3,0), ... and the cursor only moves
// forward, so decoding is amortised O(|members| + edges).
void sample_within(const std::vector<NodeId>& members, double p, std::mt19937_64& rng,
                   EdgeList& out) {
  const std::uint64_t size = members.size();
  if (size < 2) return;
  std::uint64_t row = 1;
  std::uint64_t row_start = 0;  // rank of pair (row, 0)
  sample_ranks(size * (size - 1) / 2, p, rng, [&](std::uint64_t r) {
    while (r >= row_start + row) {
      row_start += row;
      ++row;
    }
    out.emplace_back(members[r - row_start], members[row]);
  });
}

void sample_across(const std::vector<NodeId>& left, const std::vector<NodeId>& right, double p,
                   std::mt19937_64& rng, EdgeList& out) {
  const std::uint64_t cols = right.size();
  sample_ranks(left.size() * cols, p, rng, [&](std::uint64_t r) {
    out.emplace_back(left[r / cols], right[r % cols]);
  });
}

}  // namespace

Graph gen_path(std::size_t n) {
  if (n == 0) throw InvalidParameter("path needs at least one node");
  EdgeList edges;
  edges.reserve(n - 1);
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph gen_er(std::size_t n, double p, std::uint64_t graph_seed) {
  if (n == 0) throw InvalidParameter("G(n, p) needs at least one node");
  check_probability(p, "edge probability");
  std::vector<NodeId> nodes(n);
  for (NodeId v = 0; v < n; ++v) nodes[v] = v;
  std::mt19937_64 rng(graph_seed);
  EdgeList edges;
  sample_within(nodes, p, rng, edges);
  return Graph::from_edges(n, edges);
}

Graph gen_clustered_er(const PlantedModel& model, std::uint64_t graph_seed) {
  model.validate();
  const auto blocks = model.blocks();
  std::mt19937_64 rng(graph_seed);
  EdgeList edges;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    sample_within(blocks[b], model.intra_probs[b], rng, edges);
  }
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < blocks.size(); ++b) {
      sample_across(blocks[a], blocks[b], model.inter_prob, rng, edges);
    }
  }
  return Graph::from_edges(model.num_nodes(), edges);
}

}  // namespace maxlpa
