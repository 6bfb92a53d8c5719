#include "maxlpa/graph_io.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>

#include "maxlpa/errors.hpp"

namespace maxlpa {
namespace {

// Reads one line and splits it into exactly `count` unsigned integers
// separated by single spaces.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::size_t line() const noexcept { return line_; }

  template <std::size_t Count>
  std::array<std::uint64_t, Count> fields(const char* what) {
    std::string text;
    ++line_;
    if (!std::getline(in_, text)) {
      throw FormatError(line_, std::string("unexpected end of input, expected ") + what);
    }
    if (in_.eof()) throw FormatError(line_, "missing trailing newline");
    std::array<std::uint64_t, Count> values{};
    std::string_view rest = text;
    for (std::size_t i = 0; i < Count; ++i) {
      if (i > 0) {
        if (rest.empty() || rest.front() != ' ') {
          throw FormatError(line_, std::string("expected ") + what);
        }
        rest.remove_prefix(1);
      }
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), values[i]);
      if (ec != std::errc() || ptr == rest.data()) {
        throw FormatError(line_, std::string("expected ") + what + ", got '" + text + "'");
      }
      rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    }
    if (!rest.empty()) {
      throw FormatError(line_, std::string("trailing characters after ") + what);
    }
    return values;
  }

  void expect_end() {
    std::string text;
    if (std::getline(in_, text)) {
      throw FormatError(line_ + 1, "unexpected content after last record");
    }
  }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  auto [n, m] = reader.fields<2>("header '<n> <m>'");
  if (n > std::numeric_limits<NodeId>::max()) throw FormatError(1, "node count too large");
  if (n >= 2 && m > n * (n - 1) / 2) throw FormatError(1, "more edges than node pairs");
  if (n < 2 && m > 0) throw FormatError(1, "more edges than node pairs");

  EdgeList edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    auto [u, v] = reader.fields<2>("edge '<u> <v>'");
    if (u == v) throw FormatError(reader.line(), "self-loop on node " + std::to_string(u));
    if (u > v) throw FormatError(reader.line(), "edge endpoints must satisfy u < v");
    if (v >= n) throw FormatError(reader.line(), "node id " + std::to_string(v) + " >= n");
    std::pair<NodeId, NodeId> edge{static_cast<NodeId>(u), static_cast<NodeId>(v)};
    if (!edges.empty()) {
      if (edge == edges.back()) throw FormatError(reader.line(), "duplicate edge");
      if (edge < edges.back()) throw FormatError(reader.line(), "edges not in ascending order");
    }
    edges.push_back(edge);
  }
  reader.expect_end();
  return Graph::from_edges(n, edges);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_nodes() << ' ' << g.num_edges() << '\n';
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

std::vector<std::uint32_t> read_block_sidecar(std::istream& in, std::size_t n) {
  LineReader reader(in);
  auto [k] = reader.fields<1>("block count '<k>'");
  if (k == 0 || k > n) throw FormatError(1, "block count must be in [1, n]");
  std::vector<std::uint32_t> block_of(n);
  std::vector<bool> seen(k, false);
  for (std::size_t v = 0; v < n; ++v) {
    auto [b] = reader.fields<1>("block index");
    if (b >= k) throw FormatError(reader.line(), "block index " + std::to_string(b) + " >= k");
    block_of[v] = static_cast<std::uint32_t>(b);
    seen[b] = true;
  }
  reader.expect_end();
  for (std::size_t b = 0; b < k; ++b) {
    if (!seen[b]) throw FormatError(0, "block " + std::to_string(b) + " has no nodes");
  }
  return block_of;
}

void write_block_sidecar(std::ostream& out, const PlantedModel& model) {
  out << model.num_blocks() << '\n';
  for (auto b : model.block_of) out << b << '\n';
}

}  // namespace maxlpa
