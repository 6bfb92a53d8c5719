#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "maxlpa/graph.hpp"

namespace maxlpa {

// Graph text format:
//
//   <n> <m>
//   <u> <v>      (m lines, u < v, lexicographically ascending, 0-indexed)
//
// Every line is newline-terminated. write_graph emits exactly this form and
// read_graph accepts only this form, so write(read(f)) == f for canonical f.

/// Throws FormatError (with the offending line) on malformed input,
/// self-loops, u >= v, out-of-order or repeated edges, or an edge count
/// that disagrees with the header.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

// Planted-partition sidecar:
//
//   <k>
//   <block_index>  (one line per node)

/// Reads the sidecar for a graph on n nodes. Every block index must be < k
/// and every block non-empty.
std::vector<std::uint32_t> read_block_sidecar(std::istream& in, std::size_t n);
void write_block_sidecar(std::ostream& out, const PlantedModel& model);

}  // namespace maxlpa
