#include "maxlpa/lpa.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "maxlpa/components.hpp"
#include "maxlpa/errors.hpp"
#include "maxlpa/worker_pool.hpp"

namespace maxlpa {

LabelState init_labels(std::size_t n, std::uint64_t label_seed) {
  LabelState s;
  s.labels.resize(n);
  std::iota(s.labels.begin(), s.labels.end(), Label{1});
  std::mt19937_64 rng(label_seed);
  std::shuffle(s.labels.begin(), s.labels.end(), rng);
  return s;
}

LabelState make_initial_state(std::vector<Label> labels) {
  std::vector<Label> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidParameter("initial labels must be pairwise distinct");
  }
  return LabelState{std::move(labels), 0};
}

Label update_label(const Graph& g, std::span<const Label> labels, NodeId v,
                   std::vector<Label>& scratch) {
  auto nbrs = g.neighbors(v);
  if (nbrs.empty()) return labels[v];

  scratch.clear();
  scratch.push_back(labels[v]);
  for (NodeId u : nbrs) scratch.push_back(labels[u]);
  std::sort(scratch.begin(), scratch.end());

  // Ascending runs; ">=" lets a later (larger) label win ties.
  Label best = scratch.front();
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < scratch.size();) {
    std::size_t j = i + 1;
    while (j < scratch.size() && scratch[j] == scratch[i]) ++j;
    if (j - i >= best_count) {
      best_count = j - i;
      best = scratch[i];
    }
    i = j;
  }
  return best;
}

void step_into(const Graph& g, std::span<const Label> in, std::span<Label> out,
               WorkerPool* pool) {
  const std::size_t n = g.num_nodes();
  auto range = [&](std::size_t begin, std::size_t end) {
    std::vector<Label> scratch;
    for (std::size_t v = begin; v < end; ++v) {
      out[v] = update_label(g, in, static_cast<NodeId>(v), scratch);
    }
  };
  if (pool != nullptr && pool->size() > 1) {
    pool->parallel_for(n, range, 1024);
  } else {
    range(0, n);
  }
}

LabelState step(const Graph& g, const LabelState& s, WorkerPool* pool) {
  if (s.size() != g.num_nodes()) {
    throw std::invalid_argument("label state has " + std::to_string(s.size()) +
                                " entries for a graph on " + std::to_string(g.num_nodes()) +
                                " nodes");
  }
  LabelState next;
  next.labels.resize(s.size());
  next.round = s.round + 1;
  step_into(g, s.labels, next.labels, pool);
  return next;
}

std::size_t default_max_rounds(std::size_t n) noexcept { return 4 * n + 16; }

std::vector<NodeId> RunResult::oscillating_nodes() const {
  std::vector<NodeId> out;
  if (period != 2 || final_states.size() != 2) return out;
  const auto& a = final_states[0].labels;
  const auto& b = final_states[1].labels;
  for (NodeId v = 0; v < a.size(); ++v) {
    if (a[v] != b[v]) out.push_back(v);
  }
  return out;
}

RunResult run(const Graph& g, const LabelState& s0, const RunOptions& options) {
  if (s0.size() != g.num_nodes()) {
    throw std::invalid_argument("initial state size does not match the graph");
  }
  if (s0.round != 0) throw std::invalid_argument("run expects a round-0 state");

  const std::size_t max_rounds =
      options.max_rounds == 0 ? default_max_rounds(g.num_nodes()) : options.max_rounds;

  RunResult result;
  if (options.keep_history) result.history.push_back(s0);
  if (options.observer) options.observer(s0);

  // Rolling window: older = state t-2, prev = state t-1, cur = state t.
  LabelState older;
  LabelState prev = s0;
  LabelState cur;
  cur.labels.resize(s0.size());
  bool have_older = false;

  for (std::size_t t = 1; t <= max_rounds; ++t) {
    step_into(g, prev.labels, cur.labels, options.pool);
    cur.round = t;
    if (options.keep_history) result.history.push_back(cur);
    if (options.observer) options.observer(cur);

    if (cur.labels == prev.labels) {
      result.t_star = t - 1;
      result.period = 1;
      result.final_states.push_back(std::move(prev));
      return result;
    }
    if (have_older && cur.labels == older.labels) {
      result.t_star = t - 2;
      result.period = 2;
      result.final_states.push_back(std::move(older));
      result.final_states.push_back(std::move(prev));
      return result;
    }
    std::swap(older, prev);
    std::swap(prev, cur);
    if (cur.labels.size() != s0.size()) cur.labels.resize(s0.size());
    have_older = true;
  }

  result.truncated = true;
  result.t_star = max_rounds;
  result.period = 0;
  if (have_older) result.final_states.push_back(std::move(older));
  result.final_states.push_back(std::move(prev));
  return result;
}

std::vector<Community> extract_communities(const Graph& g, const LabelState& s) {
  if (s.size() != g.num_nodes()) {
    throw std::invalid_argument("label state size does not match the graph");
  }
  std::unordered_map<Label, std::size_t> index_of;
  std::vector<Community> out;
  for (NodeId v = 0; v < s.size(); ++v) {
    auto [it, inserted] = index_of.try_emplace(s.labels[v], out.size());
    if (inserted) out.push_back(Community{s.labels[v], {}, false});
    out[it->second].members.push_back(v);
  }

  DisjointSets sets(g.num_nodes());
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v && s.labels[u] == s.labels[v]) sets.unite(u, v);
    }
  }
  for (auto& community : out) {
    NodeId root = sets.find(community.members.front());
    community.connected = std::all_of(community.members.begin(), community.members.end(),
                                      [&](NodeId v) { return sets.find(v) == root; });
  }
  return out;
}

std::size_t count_communities(std::span<const Label> labels) {
  std::vector<Label> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

void write_trajectory(std::ostream& out, std::span<const LabelState> states) {
  for (const auto& state : states) {
    for (std::size_t i = 0; i < state.labels.size(); ++i) {
      if (i > 0) out << ' ';
      out << state.labels[i];
    }
    out << '\n';
  }
}

namespace {

std::vector<Label> parse_labels(std::string_view text, std::size_t line) {
  std::vector<Label> labels;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (p != end) {
    if (*p == ' ' || *p == '\t' || *p == '\r' || *p == '\n') {
      ++p;
      continue;
    }
    Label value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc() || next == p) throw FormatError(line, "expected an unsigned label");
    if (next != end && *next != ' ' && *next != '\t' && *next != '\r' && *next != '\n') {
      throw FormatError(line, "expected an unsigned label");
    }
    labels.push_back(value);
    p = next;
  }
  return labels;
}

}  // namespace

std::vector<std::vector<Label>> read_trajectory(std::istream& in) {
  std::vector<std::vector<Label>> states;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    states.push_back(parse_labels(line, number));
    if (states.back().size() != states.front().size()) {
      throw FormatError(number, "trajectory rows differ in length");
    }
  }
  return states;
}

std::vector<Label> read_labels(std::istream& in) {
  std::vector<Label> labels;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto row = parse_labels(line, number);
    labels.insert(labels.end(), row.begin(), row.end());
  }
  return labels;
}

}  // namespace maxlpa
