#include "maxlpa/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "maxlpa/generators.hpp"
#include "maxlpa/seeding.hpp"

namespace maxlpa {

MaximaReport khop_maxima(const Graph& g, std::span<const Label> labels, std::size_t k) {
  if (k == 0) throw std::invalid_argument("hop radius must be at least 1");
  const std::size_t n = g.num_nodes();
  if (labels.size() != n) throw std::invalid_argument("label count does not match the graph");

  MaximaReport report;
  report.k = k;

  // visited[w] == v + 1 marks w as reached from source v.
  std::vector<std::size_t> visited(n, 0);
  std::vector<NodeId> frontier;
  std::vector<NodeId> next;
  for (NodeId v = 0; v < n; ++v) {
    const Label own = labels[v];
    visited[v] = v + 1;
    frontier.assign(1, v);
    bool is_max = true;
    for (std::size_t depth = 0; depth < k && is_max && !frontier.empty(); ++depth) {
      next.clear();
      for (NodeId u : frontier) {
        for (NodeId w : g.neighbors(u)) {
          if (visited[w] == v + 1) continue;
          if (labels[w] >= own) {
            is_max = false;
            break;
          }
          visited[w] = v + 1;
          next.push_back(w);
        }
        if (!is_max) break;
      }
      frontier.swap(next);
    }
    if (is_max) report.maxima.push_back(v);
  }

  if (report.maxima.size() >= 2) {
    std::size_t gap = 0;
    for (std::size_t i = 1; i < report.maxima.size(); ++i) {
      gap = std::max<std::size_t>(gap, report.maxima[i] - report.maxima[i - 1]);
    }
    report.max_gap = gap;
  }
  return report;
}

PathMaximaSummary path_maxima_statistics(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (n < 5) throw std::invalid_argument("path maxima statistics need n >= 5");
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  const Graph path = gen_path(n);

  PathMaximaSummary summary;
  summary.n = n;
  summary.trials = trials;
  summary.min_count = std::numeric_limits<std::size_t>::max();
  double count_total = 0.0;
  double gap_total = 0.0;
  std::size_t gap_trials = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const LabelState labels = init_labels(n, mix_seed(seed, trial));
    const MaximaReport report = khop_maxima(path, labels.labels, 2);
    const std::size_t count = report.maxima.size();
    summary.counts.push_back(count);
    count_total += static_cast<double>(count);
    summary.min_count = std::min(summary.min_count, count);
    summary.max_count = std::max(summary.max_count, count);
    if (report.max_gap) {
      gap_total += static_cast<double>(*report.max_gap);
      ++gap_trials;
      summary.largest_gap = std::max(summary.largest_gap, *report.max_gap);
    }
  }
  summary.mean_count = count_total / static_cast<double>(trials);
  summary.mean_max_gap = gap_trials == 0 ? 0.0 : gap_total / static_cast<double>(gap_trials);
  return summary;
}

RecoveryVerdict compare_partition(std::span<const std::vector<NodeId>> found,
                                  std::span<const std::uint32_t> planted_block_of) {
  const std::size_t n = planted_block_of.size();
  std::vector<bool> covered(n, false);
  std::size_t covered_count = 0;
  for (const auto& group : found) {
    if (group.empty()) throw std::invalid_argument("found partition contains an empty group");
    for (NodeId v : group) {
      if (v >= n) throw std::invalid_argument("found partition names a node outside the graph");
      if (covered[v]) throw std::invalid_argument("found partition lists a node twice");
      covered[v] = true;
      ++covered_count;
    }
  }
  if (covered_count != n) throw std::invalid_argument("found partition does not cover every node");

  RecoveryVerdict verdict;
  verdict.num_communities = found.size();

  std::vector<std::uint32_t> distinct(planted_block_of.begin(), planted_block_of.end());
  std::sort(distinct.begin(), distinct.end());
  const auto planted_blocks =
      static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());

  // Disjoint groups covering V that are each inside one block equal the
  // planted partition exactly when there are as many groups as blocks.
  bool homogeneous = std::all_of(found.begin(), found.end(), [&](const auto& group) {
    const auto block = planted_block_of[group.front()];
    return std::all_of(group.begin(), group.end(),
                       [&](NodeId v) { return planted_block_of[v] == block; });
  });
  verdict.exact_match = homogeneous && found.size() == planted_blocks;
  return verdict;
}

RecoveryVerdict compare_partition(std::span<const Community> found, const PlantedModel& planted) {
  std::vector<std::vector<NodeId>> groups;
  groups.reserve(found.size());
  for (const auto& community : found) groups.push_back(community.members);
  return compare_partition(groups, planted.block_of);
}

RecoveryVerdict assess_recovery(const Graph& g, const RunResult& result,
                                std::span<const std::uint32_t> planted_block_of) {
  const auto communities = extract_communities(g, result.final_state());
  std::vector<std::vector<NodeId>> groups;
  groups.reserve(communities.size());
  for (const auto& community : communities) groups.push_back(community.members);
  RecoveryVerdict verdict = compare_partition(groups, planted_block_of);
  verdict.rounds = result.t_star;
  verdict.period = result.period;
  if (result.truncated || result.period != 1) verdict.exact_match = false;
  return verdict;
}

std::vector<BlockConditions> recovery_conditions(const PlantedModel& model, double c,
                                                 std::size_t n) {
  model.validate();
  if (!(c > 0.0)) throw std::invalid_argument("constant c must be positive");
  const auto sizes = model.block_sizes();
  const double log_n = std::log(static_cast<double>(n));
  const double nd = static_cast<double>(n);

  std::vector<BlockConditions> out;
  for (std::size_t b = 0; b < model.num_blocks(); ++b) {
    BlockConditions cond;
    cond.block = b;
    cond.block_size = sizes[b];
    cond.intra_prob = model.intra_probs[b];
    const double ni = static_cast<double>(sizes[b]);
    const double p2 = cond.intra_prob * cond.intra_prob;
    cond.separation_lhs = ni * p2;
    cond.separation_rhs = 8.0 * nd * model.inter_prob;
    cond.separation_holds = cond.separation_lhs > cond.separation_rhs;
    cond.density_lhs = ni * p2 * p2;
    cond.density_rhs = 1800.0 * c * log_n;
    cond.density_holds = cond.density_lhs > cond.density_rhs;
    out.push_back(cond);
  }
  return out;
}

namespace {

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

}  // namespace

std::string PropertyViolation::to_csv_row() const {
  return std::to_string(seed) + ',' + std::to_string(n) + ',' + csv_field(parameters) + ',' +
         csv_field(property) + ',' + format_double(margin);
}

bool is_path_graph(const Graph& g) noexcept {
  const std::size_t n = g.num_nodes();
  if (n == 0 || g.num_edges() != n - 1) return false;
  for (NodeId v = 0; v + 1 < n; ++v) {
    if (!g.has_edge(v, v + 1)) return false;
  }
  return true;
}

bool labels_contiguous_on_path(std::span<const Label> labels) {
  std::unordered_set<Label> finished;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0 && labels[i] == labels[i - 1]) continue;
    if (!finished.insert(labels[i]).second) return false;
  }
  return true;
}

PathBoundsReport path_bounds_check(const Graph& g, const LabelState& s0, const RunResult& result,
                                   std::uint64_t seed) {
  if (!is_path_graph(g)) throw std::invalid_argument("path_bounds_check expects a path graph");
  if (result.truncated) throw std::invalid_argument("path_bounds_check expects a converged run");
  const std::size_t n = g.num_nodes();

  PathBoundsReport report;
  const MaximaReport maxima = khop_maxima(g, s0.labels, 2);
  report.maxima_count = maxima.maxima.size();
  report.max_gap = maxima.max_gap;
  report.communities = count_communities(result.final_state().labels);
  report.t_star = result.t_star;
  report.round_bound = maxima.max_gap.value_or(n - 1) + 2;
  report.period = result.period;

  const std::string parameters = "path n=" + std::to_string(n);
  if (report.period != 1) {
    report.violations.push_back({seed, n, parameters, "period-one", 1.0 - report.period});
  }
  if (report.community_margin() < 0) {
    report.violations.push_back({seed, n, parameters, "communities-at-least-2hop-maxima",
                                 static_cast<double>(report.community_margin())});
  }
  if (report.round_margin() < 0) {
    report.violations.push_back({seed, n, parameters, "rounds-at-most-gap-plus-2",
                                 static_cast<double>(report.round_margin())});
  }
  return report;
}

}  // namespace maxlpa
