#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "maxlpa/graph.hpp"

namespace maxlpa {

class WorkerPool;

/// Labels come from a totally ordered domain; only order and equality matter
/// to the update rule.
using Label = std::uint64_t;

struct LabelState {
  std::vector<Label> labels;
  std::size_t round = 0;

  std::size_t size() const noexcept { return labels.size(); }
  /// Compares labels only; the round counter is bookkeeping.
  bool same_labels(const LabelState& other) const noexcept { return labels == other.labels; }
  bool operator==(const LabelState&) const = default;
};

/// Uniformly random permutation of {1, ..., n} drawn from label_seed.
/// A permutation of distinct integers has the same order statistics as n
/// i.i.d. uniform reals and never collides.
LabelState init_labels(std::size_t n, std::uint64_t label_seed);

/// Wraps caller-provided round-0 labels. Throws InvalidParameter when the
/// labels are not pairwise distinct.
LabelState make_initial_state(std::vector<Label> labels);

/// New label of v: the largest among the most frequent labels in the closed
/// neighborhood N(v) + {v}. scratch is reused between calls.
Label update_label(const Graph& g, std::span<const Label> labels, NodeId v,
                   std::vector<Label>& scratch);

/// One synchronous round into `out` (same size as `in`, must not alias it).
/// With a pool, nodes are partitioned across workers; the result is
/// identical for every pool size.
void step_into(const Graph& g, std::span<const Label> in, std::span<Label> out,
               WorkerPool* pool = nullptr);

/// One synchronous round. Throws std::invalid_argument on a size mismatch.
LabelState step(const Graph& g, const LabelState& s, WorkerPool* pool = nullptr);

std::size_t default_max_rounds(std::size_t n) noexcept;

struct RunOptions {
  /// Upper bound on executed rounds; 0 selects default_max_rounds(n).
  std::size_t max_rounds = 0;
  /// Retain every state from round 0 through the round that closed the cycle.
  bool keep_history = false;
  WorkerPool* pool = nullptr;
  /// Invoked on every state in order, starting with the initial one.
  std::function<void(const LabelState&)> observer;
};

struct RunResult {
  /// First round of the repeating cycle. When truncated, the number of
  /// rounds executed.
  std::size_t t_star = 0;
  /// 1 or 2; 0 when truncated.
  int period = 0;
  /// One state for period 1, the two alternating states for period 2, the
  /// last two states seen when truncated.
  std::vector<LabelState> final_states;
  std::vector<LabelState> history;
  bool truncated = false;

  const LabelState& final_state() const { return final_states.front(); }
  /// Nodes whose label differs between the two states of a 2-cycle.
  std::vector<NodeId> oscillating_nodes() const;
};

/// Iterates step until the state equals the one from one round earlier
/// (period 1) or two rounds earlier (period 2). If state t is the first
/// such repeat, t_star is t - 1 or t - 2 respectively. Memory is O(n)
/// unless keep_history is set.
///
/// Throws std::invalid_argument if s0 is not a round-0 state of size n.
RunResult run(const Graph& g, const LabelState& s0, const RunOptions& options = {});

struct Community {
  Label label = 0;
  std::vector<NodeId> members;  // ascending
  /// Whether the members induce a connected subgraph. Diagnostic only.
  bool connected = false;
};

/// Groups nodes by label, ordered by smallest member.
std::vector<Community> extract_communities(const Graph& g, const LabelState& s);

/// Number of distinct labels.
std::size_t count_communities(std::span<const Label> labels);

/// Trajectory dump: one line per state, labels separated by single spaces.
void write_trajectory(std::ostream& out, std::span<const LabelState> states);
std::vector<std::vector<Label>> read_trajectory(std::istream& in);

/// Label file for injected initial labels: whitespace-separated integers.
std::vector<Label> read_labels(std::istream& in);

}  // namespace maxlpa
