#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxlpa/analysis.hpp"
#include "maxlpa/graph.hpp"
#include "maxlpa/lpa.hpp"

namespace maxlpa {

enum class ExperimentKind { table1, table2, rounds_figure };

std::string_view to_string(ExperimentKind kind) noexcept;

/// Logarithm used in the sparse edge probability c * log(n) / n.
enum class LogBase { binary, natural };

std::string_view to_string(LogBase base) noexcept;
LogBase parse_log_base(std::string_view text);

/// c * log(n) / n in the given base. Values within 1e-9 above 1 are clamped
/// to 1; anything larger throws ConfigError.
double sparse_edge_probability(std::size_t n, double c, LogBase base);

/// Inter-block probability, either absolute or a coefficient over n.
/// Text form: "0.001" or "0.6/n".
struct InterProbRule {
  double value = 0.6;
  bool per_node = true;

  double resolve(std::size_t n) const noexcept {
    return per_node ? value / static_cast<double>(n) : value;
  }
  std::string to_string() const;
  static InterProbRule parse(std::string_view text);
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::table1;
  std::vector<std::size_t> n_values;
  std::vector<double> c_values;
  std::size_t trials = 50;
  std::uint64_t base_seed = 1;
  InterProbRule inter_prob;
  LogBase log_base = LogBase::binary;
  std::size_t max_rounds = 0;  // 0: default_max_rounds(n)
  std::size_t threads = 1;

  /// Throws ConfigError when trials = 0, any n < 2, no n or c values, a
  /// derived probability leaves [0, 1], two-block cells get an odd n, or the
  /// inter-block probability is not below the intra-block one.
  void validate() const;
};

struct TrialSeeds {
  std::uint64_t graph_seed = 0;
  std::uint64_t label_seed = 0;
};

/// graph_seed = mix_seed(base, {tag, n, bits(c), trial, 0}) and
/// label_seed = mix_seed(base, {tag, n, bits(c), trial, 1}), where tag is 1,
/// 2, 3 for table1, table2, rounds. Depends only on the cell's own
/// parameters, so adding cells leaves existing trials unchanged.
TrialSeeds derive_trial_seeds(std::uint64_t base_seed, ExperimentKind kind, std::size_t n,
                              double c, std::size_t trial) noexcept;

struct TrialRecord {
  ExperimentKind kind = ExperimentKind::table1;
  std::size_t n = 0;
  double c = 0.0;
  std::size_t trial = 0;
  std::uint64_t graph_seed = 0;
  std::uint64_t label_seed = 0;
  bool connected = false;
  std::size_t rounds = 0;
  int period = 0;
  std::size_t communities = 0;
  std::optional<bool> matches_planted;
  bool truncated = false;

  /// Converged with period 1 to exactly one label.
  bool single_community() const noexcept {
    return !truncated && period == 1 && communities == 1;
  }
  /// The per-cell success criterion: exact recovery for two-block cells,
  /// a single community otherwise.
  bool success() const noexcept {
    return matches_planted ? *matches_planted : single_community();
  }
};

struct CellSummary {
  std::size_t n = 0;
  double c = 0.0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t connected = 0;
  std::size_t period_two = 0;
  std::size_t truncated = 0;
  /// Mean rounds over trials that ended in a single community; empty if none.
  std::optional<double> mean_rounds;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<TrialRecord> records;  // cell-major (n, then c), then trial index
  std::vector<CellSummary> cells;
};

/// Sparse G(n, c log n / n) per (n, c) cell; success = single community.
ExperimentReport run_table1(const ExperimentConfig& config);
/// Two equal blocks, p = c log n / n, inter-block probability from the rule;
/// success = exact recovery of the blocks.
ExperimentReport run_table2(const ExperimentConfig& config);
/// Same graphs as table1; the output of interest is mean rounds per cell.
ExperimentReport run_rounds_figure(const ExperimentConfig& config);
/// Dispatches on config.kind.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// Summaries are always recomputed from records.
std::vector<CellSummary> summarize(const ExperimentConfig& config,
                                   const std::vector<TrialRecord>& records);

inline constexpr std::string_view kCsvHeader =
    "experiment,n,c,trial,graph_seed,label_seed,connected,rounds,period,communities,"
    "matches_planted,truncated";

std::string format_number(double value);
std::string to_csv_row(const TrialRecord& record);
void write_csv(std::ostream& out, const std::vector<TrialRecord>& records);
/// Parses what write_csv produced. Throws FormatError on anything else.
std::vector<TrialRecord> read_csv(std::istream& in);

/// Grid with one row per n and one column per c: "successes (connected)".
void write_summary(std::ostream& out, const ExperimentReport& report);

/// Per c: "# series c=<c>" followed by "x y" lines, x = log2(n / 1000),
/// y = mean rounds. Cells without a single-community trial are skipped.
void write_plot_data(std::ostream& out, const ExperimentReport& report);

// Single runs.

enum class ModelKind { path, er, cer };

struct ModelSpec {
  ModelKind kind = ModelKind::path;
  std::size_t n = 0;
  /// Edge (or intra-block) probability. Unused for paths.
  double p = 0.0;
  std::size_t blocks = 2;
  double inter_prob = 0.0;

  /// Throws ConfigError for a malformed spec.
  void validate() const;
};

ModelKind parse_model_kind(std::string_view text);

struct SingleRunOutcome {
  Graph graph;
  std::optional<std::vector<std::uint32_t>> planted_block_of;
  bool connected = false;
  LabelState initial;
  RunResult result;
  std::vector<Community> communities;
  std::optional<RecoveryVerdict> recovery;
};

/// Builds the graph for spec (with its planted partition for cer).
Graph build_graph(const ModelSpec& spec, std::uint64_t graph_seed,
                  std::optional<PlantedModel>* planted = nullptr);

/// Runs the protocol on g from s0 and collects communities, connectivity and,
/// when a planted partition is given, the recovery verdict.
SingleRunOutcome run_on_graph(Graph g, LabelState s0, const RunOptions& options,
                              std::optional<std::vector<std::uint32_t>> planted_block_of = {});

/// Generates from spec; initial labels come from `labels` when given,
/// otherwise from seed.label_seed.
SingleRunOutcome run_single(const ModelSpec& spec, const Seed& seed,
                            std::optional<std::vector<Label>> labels, const RunOptions& options);

/// Human-readable "key value" report of a single run.
void write_run_report(std::ostream& out, const SingleRunOutcome& outcome);

}  // namespace maxlpa
