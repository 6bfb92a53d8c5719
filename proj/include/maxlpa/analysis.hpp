#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxlpa/graph.hpp"
#include "maxlpa/lpa.hpp"

namespace maxlpa {

struct MaximaReport {
  std::size_t k = 0;
  /// Nodes whose label strictly exceeds every label within distance k, ascending.
  std::vector<NodeId> maxima;
  /// Largest id difference between consecutive maxima. Meaningful on paths
  /// (where ids follow the path order); empty with fewer than two maxima.
  std::optional<std::size_t> max_gap;
};

/// k-hop maxima by breadth-first expansion to depth k from every node.
/// Throws std::invalid_argument for k = 0 or a size mismatch.
MaximaReport khop_maxima(const Graph& g, std::span<const Label> labels, std::size_t k);

struct PathMaximaSummary {
  std::size_t n = 0;
  std::size_t trials = 0;
  std::vector<std::size_t> counts;  // 2-hop maxima per trial
  double mean_count = 0.0;
  std::size_t min_count = 0;
  std::size_t max_count = 0;
  /// Gap statistics over trials that have at least two maxima.
  double mean_max_gap = 0.0;
  std::size_t largest_gap = 0;
};

/// 2-hop maxima of `trials` fresh labelings of P_n. Trial i uses labels
/// drawn from mix_seed(seed, i). Requires n >= 5.
PathMaximaSummary path_maxima_statistics(std::size_t n, std::size_t trials, std::uint64_t seed);

struct RecoveryVerdict {
  bool exact_match = false;
  std::size_t num_communities = 0;
  std::size_t rounds = 0;
  int period = 0;
};

/// Label-agnostic set-partition equality between `found` (groups of node
/// ids) and the planted blocks. Throws std::invalid_argument unless `found`
/// covers every node exactly once.
RecoveryVerdict compare_partition(std::span<const std::vector<NodeId>> found,
                                  std::span<const std::uint32_t> planted_block_of);
RecoveryVerdict compare_partition(std::span<const Community> found, const PlantedModel& planted);

/// Compares the settled state of a run with the planted blocks. Period-2 and
/// truncated runs never count as an exact match.
RecoveryVerdict assess_recovery(const Graph& g, const RunResult& result,
                                std::span<const std::uint32_t> planted_block_of);

/// Sufficient conditions for two-round exact recovery on a clustered random
/// graph, evaluated per block with natural logarithms:
///   (i)  n_i p_i^2 > 8 n p'
///   (ii) n_i p_i^4 > 1800 c ln n
struct BlockConditions {
  std::size_t block = 0;
  std::size_t block_size = 0;
  double intra_prob = 0.0;
  double separation_lhs = 0.0;  // n_i p_i^2
  double separation_rhs = 0.0;  // 8 n p'
  bool separation_holds = false;
  double density_lhs = 0.0;  // n_i p_i^4
  double density_rhs = 0.0;  // 1800 c ln n
  bool density_holds = false;

  double separation_margin() const noexcept { return separation_lhs - separation_rhs; }
  double density_margin() const noexcept { return density_lhs - density_rhs; }
  bool holds() const noexcept { return separation_holds && density_holds; }
};

std::vector<BlockConditions> recovery_conditions(const PlantedModel& model, double c,
                                                 std::size_t n);

/// One CSV row describing a failed property check:
/// seed,n,parameters,property,margin
struct PropertyViolation {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::string parameters;
  std::string property;
  double margin = 0.0;

  std::string to_csv_row() const;
};

/// Convergence bounds on a path run.
///
/// Checks that the run settled with period 1, that the number of
/// communities is at least the number of 2-hop maxima of the initial
/// labels, and that t_star <= D + 2 where D is the largest gap between
/// consecutive 2-hop maxima (n - 1 when there are fewer than two).
struct PathBoundsReport {
  std::size_t maxima_count = 0;
  std::size_t communities = 0;
  std::optional<std::size_t> max_gap;
  std::size_t t_star = 0;
  std::size_t round_bound = 0;
  int period = 0;
  std::vector<PropertyViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  long long community_margin() const noexcept {
    return static_cast<long long>(communities) - static_cast<long long>(maxima_count);
  }
  long long round_margin() const noexcept {
    return static_cast<long long>(round_bound) - static_cast<long long>(t_star);
  }
};

/// Throws std::invalid_argument if g is not the path 0 - 1 - ... - (n-1) or
/// the run was truncated.
PathBoundsReport path_bounds_check(const Graph& g, const LabelState& s0, const RunResult& result,
                                   std::uint64_t seed);

bool is_path_graph(const Graph& g) noexcept;

/// True when every label occupies one contiguous run of positions, i.e. on
/// a path every label class induces a connected subpath.
bool labels_contiguous_on_path(std::span<const Label> labels);

}  // namespace maxlpa
