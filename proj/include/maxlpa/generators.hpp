#pragma once

#include <cstddef>
#include <cstdint>

#include "maxlpa/graph.hpp"

namespace maxlpa {

/// Path 0 - 1 - ... - (n-1). Throws InvalidParameter for n = 0.
Graph gen_path(std::size_t n);

/// G(n, p): every unordered pair present independently with probability p.
///
/// Runs in O(n + m) expected time by jumping between present pairs with
/// geometrically distributed gaps over the pair ranks. Bit-exact for equal
/// (n, p, graph_seed).
Graph gen_er(std::size_t n, double p, std::uint64_t graph_seed);

/// Clustered G(n, p) with planted blocks. Pairs inside block i appear with
/// probability p_i, pairs across blocks with the inter-block probability.
/// Validates the model first. Same complexity contract as gen_er.
Graph gen_clustered_er(const PlantedModel& model, std::uint64_t graph_seed);

}  // namespace maxlpa
