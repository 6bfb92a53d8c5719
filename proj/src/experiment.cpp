#include "maxlpa/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "maxlpa/components.hpp"
#include "maxlpa/errors.hpp"
#include "maxlpa/generators.hpp"
#include "maxlpa/seeding.hpp"
#include "maxlpa/worker_pool.hpp"

namespace maxlpa {

std::string_view to_string(ExperimentKind kind) noexcept {
  switch (kind) {
    case ExperimentKind::table1:
      return "table1";
    case ExperimentKind::table2:
      return "table2";
    case ExperimentKind::rounds_figure:
      return "rounds";
  }
  return "unknown";
}

std::string_view to_string(LogBase base) noexcept {
  return base == LogBase::binary ? "2" : "e";
}

LogBase parse_log_base(std::string_view text) {
  if (text == "2") return LogBase::binary;
  if (text == "e") return LogBase::natural;
  throw ConfigError("log base must be '2' or 'e', got '" + std::string(text) + "'");
}

double sparse_edge_probability(std::size_t n, double c, LogBase base) {
  const double nd = static_cast<double>(n);
  const double log_n = base == LogBase::binary ? std::log2(nd) : std::log(nd);
  const double p = c * log_n / nd;
  if (!(p >= 0.0)) throw ConfigError("edge probability for n=" + std::to_string(n) + " is negative");
  if (p > 1.0 + 1e-9) {
    throw ConfigError("edge probability c*log(n)/n = " + format_number(p) + " exceeds 1 for n=" +
                      std::to_string(n) + ", c=" + format_number(c));
  }
  return std::min(p, 1.0);
}

std::string InterProbRule::to_string() const {
  return per_node ? format_number(value) + "/n" : format_number(value);
}

InterProbRule InterProbRule::parse(std::string_view text) {
  InterProbRule rule;
  rule.per_node = false;
  std::string_view number = text;
  if (text.size() > 2 && text.substr(text.size() - 2) == "/n") {
    rule.per_node = true;
    number = text.substr(0, text.size() - 2);
  }
  auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), rule.value);
  if (ec != std::errc() || ptr != number.data() + number.size() || !(rule.value >= 0.0)) {
    throw ConfigError("inter-block probability must be '<value>' or '<coef>/n', got '" +
                      std::string(text) + "'");
  }
  return rule;
}

void ExperimentConfig::validate() const {
  if (trials == 0) throw ConfigError("trials must be at least 1");
  if (n_values.empty()) throw ConfigError("no n values given");
  if (c_values.empty()) throw ConfigError("no c values given");
  for (std::size_t n : n_values) {
    if (n < 2) throw ConfigError("n values must be at least 2");
    if (kind == ExperimentKind::table2 && n % 2 != 0) {
      throw ConfigError("two-block experiments need even n, got " + std::to_string(n));
    }
    for (double c : c_values) {
      if (!(c > 0.0)) throw ConfigError("c values must be positive");
      const double p = sparse_edge_probability(n, c, log_base);
      if (kind == ExperimentKind::table2) {
        const double inter = inter_prob.resolve(n);
        if (!(inter >= 0.0 && inter <= 1.0)) {
          throw ConfigError("inter-block probability outside [0, 1] for n=" + std::to_string(n));
        }
        if (!(inter < p)) {
          throw ConfigError("inter-block probability must be below c*log(n)/n for n=" +
                            std::to_string(n) + ", c=" + format_number(c));
        }
      }
    }
  }
}

TrialSeeds derive_trial_seeds(std::uint64_t base_seed, ExperimentKind kind, std::size_t n,
                              double c, std::size_t trial) noexcept {
  const std::uint64_t tag = static_cast<std::uint64_t>(kind) + 1;
  return TrialSeeds{mix_seed(base_seed, {tag, n, double_bits(c), trial, 0}),
                    mix_seed(base_seed, {tag, n, double_bits(c), trial, 1})};
}

namespace {

TrialRecord run_trial(const ExperimentConfig& config, std::size_t n, double c,
                      std::size_t trial) {
  TrialRecord record;
  record.kind = config.kind;
  record.n = n;
  record.c = c;
  record.trial = trial;
  const TrialSeeds seeds = derive_trial_seeds(config.base_seed, config.kind, n, c, trial);
  record.graph_seed = seeds.graph_seed;
  record.label_seed = seeds.label_seed;

  const double p = sparse_edge_probability(n, c, config.log_base);
  std::optional<PlantedModel> planted;
  Graph g;
  if (config.kind == ExperimentKind::table2) {
    planted = PlantedModel::equal_blocks(n, 2, p, config.inter_prob.resolve(n));
    g = gen_clustered_er(*planted, seeds.graph_seed);
  } else {
    g = gen_er(n, p, seeds.graph_seed);
  }
  record.connected = is_connected(g);

  RunOptions options;
  options.max_rounds = config.max_rounds;
  const RunResult result = run(g, init_labels(n, seeds.label_seed), options);
  record.rounds = result.t_star;
  record.period = result.period;
  record.truncated = result.truncated;
  record.communities = count_communities(result.final_state().labels);
  if (planted) record.matches_planted = assess_recovery(g, result, planted->block_of).exact_match;
  return record;
}

ExperimentReport run_cells(const ExperimentConfig& config) {
  config.validate();
  ExperimentReport report;
  report.config = config;

  const std::size_t cells = config.n_values.size() * config.c_values.size();
  report.records.resize(cells * config.trials);
  WorkerPool pool(config.threads);
  pool.parallel_for(report.records.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t cell = i / config.trials;
      const std::size_t n = config.n_values[cell / config.c_values.size()];
      const double c = config.c_values[cell % config.c_values.size()];
      report.records[i] = run_trial(config, n, c, i % config.trials);
    }
  });
  report.cells = summarize(config, report.records);
  return report;
}

ExperimentConfig with_kind(ExperimentConfig config, ExperimentKind kind) {
  config.kind = kind;
  return config;
}

}  // namespace

ExperimentReport run_table1(const ExperimentConfig& config) {
  return run_cells(with_kind(config, ExperimentKind::table1));
}

ExperimentReport run_table2(const ExperimentConfig& config) {
  return run_cells(with_kind(config, ExperimentKind::table2));
}

ExperimentReport run_rounds_figure(const ExperimentConfig& config) {
  return run_cells(with_kind(config, ExperimentKind::rounds_figure));
}

ExperimentReport run_experiment(const ExperimentConfig& config) { return run_cells(config); }

std::vector<CellSummary> summarize(const ExperimentConfig& config,
                                   const std::vector<TrialRecord>& records) {
  std::vector<CellSummary> cells;
  for (std::size_t n : config.n_values) {
    for (double c : config.c_values) {
      CellSummary cell;
      cell.n = n;
      cell.c = c;
      double rounds_total = 0.0;
      std::size_t single = 0;
      for (const auto& record : records) {
        if (record.n != n || record.c != c) continue;
        ++cell.trials;
        if (record.success()) ++cell.successes;
        if (record.connected) ++cell.connected;
        if (record.period == 2) ++cell.period_two;
        if (record.truncated) ++cell.truncated;
        if (record.single_community()) {
          rounds_total += static_cast<double>(record.rounds);
          ++single;
        }
      }
      if (single > 0) cell.mean_rounds = rounds_total / static_cast<double>(single);
      cells.push_back(cell);
    }
  }
  return cells;
}

std::string format_number(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

std::string to_csv_row(const TrialRecord& r) {
  std::string row;
  row += to_string(r.kind);
  row += ',' + std::to_string(r.n);
  row += ',' + format_number(r.c);
  row += ',' + std::to_string(r.trial);
  row += ',' + std::to_string(r.graph_seed);
  row += ',' + std::to_string(r.label_seed);
  row += r.connected ? ",true" : ",false";
  row += ',' + std::to_string(r.rounds);
  row += ',' + std::to_string(r.period);
  row += ',' + std::to_string(r.communities);
  row += !r.matches_planted ? ",n/a" : (*r.matches_planted ? ",true" : ",false");
  row += r.truncated ? ",true" : ",false";
  return row;
}

void write_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
  out << kCsvHeader << '\n';
  for (const auto& record : records) out << to_csv_row(record) << '\n';
}

namespace {

template <typename T>
T parse_field(std::string_view text, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw FormatError(line, "bad numeric field '" + std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view text, std::size_t line) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw FormatError(line, "bad boolean field '" + std::string(text) + "'");
}

}  // namespace

std::vector<TrialRecord> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw FormatError(1, "missing CSV header");
  std::vector<TrialRecord> records;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
      auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 12) throw FormatError(number, "expected 12 fields");

    TrialRecord r;
    if (fields[0] == "table1") {
      r.kind = ExperimentKind::table1;
    } else if (fields[0] == "table2") {
      r.kind = ExperimentKind::table2;
    } else if (fields[0] == "rounds") {
      r.kind = ExperimentKind::rounds_figure;
    } else {
      throw FormatError(number, "unknown experiment '" + std::string(fields[0]) + "'");
    }
    r.n = parse_field<std::size_t>(fields[1], number);
    r.c = parse_field<double>(fields[2], number);
    r.trial = parse_field<std::size_t>(fields[3], number);
    r.graph_seed = parse_field<std::uint64_t>(fields[4], number);
    r.label_seed = parse_field<std::uint64_t>(fields[5], number);
    r.connected = parse_bool(fields[6], number);
    r.rounds = parse_field<std::size_t>(fields[7], number);
    r.period = parse_field<int>(fields[8], number);
    r.communities = parse_field<std::size_t>(fields[9], number);
    if (fields[10] != "n/a") r.matches_planted = parse_bool(fields[10], number);
    r.truncated = parse_bool(fields[11], number);
    records.push_back(r);
  }
  return records;
}

void write_summary(std::ostream& out, const ExperimentReport& report) {
  const auto& config = report.config;
  const bool rounds = config.kind == ExperimentKind::rounds_figure;
  out << "# " << to_string(config.kind) << ": "
      << (rounds ? "mean rounds over single-community trials [single/trials]"
          : config.kind == ExperimentKind::table2 ? "exact recoveries (connected graphs)"
                                                  : "single-community runs (connected graphs)")
      << ", " << config.trials << " trials per cell, p = c*log" << to_string(config.log_base)
      << "(n)/n";
  if (config.kind == ExperimentKind::table2) out << ", p' = " << config.inter_prob.to_string();
  out << '\n';

  out << std::left << std::setw(10) << "n";
  for (double c : config.c_values) out << std::setw(16) << ("c=" + format_number(c));
  out << '\n';
  for (std::size_t row = 0; row < config.n_values.size(); ++row) {
    out << std::setw(10) << config.n_values[row];
    for (std::size_t col = 0; col < config.c_values.size(); ++col) {
      const auto& cell = report.cells[row * config.c_values.size() + col];
      std::ostringstream entry;
      if (rounds) {
        if (cell.mean_rounds) {
          entry << std::fixed << std::setprecision(2) << *cell.mean_rounds;
        } else {
          entry << "-";
        }
        entry << " [" << cell.successes << '/' << cell.trials << ']';
      } else {
        entry << cell.successes << " (" << cell.connected << ')';
      }
      out << std::setw(16) << entry.str();
    }
    out << '\n';
  }
  std::size_t period_two = 0;
  std::size_t truncated = 0;
  for (const auto& cell : report.cells) {
    period_two += cell.period_two;
    truncated += cell.truncated;
  }
  out << "# period-2 trials: " << period_two << ", truncated trials: " << truncated << '\n';
  out << std::right;
}

void write_plot_data(std::ostream& out, const ExperimentReport& report) {
  const auto& config = report.config;
  for (std::size_t col = 0; col < config.c_values.size(); ++col) {
    out << "# series c=" << format_number(config.c_values[col]) << '\n';
    for (std::size_t row = 0; row < config.n_values.size(); ++row) {
      const auto& cell = report.cells[row * config.c_values.size() + col];
      if (!cell.mean_rounds) continue;
      const double x = std::log2(static_cast<double>(cell.n) / 1000.0);
      out << format_number(x) << ' ' << format_number(*cell.mean_rounds) << '\n';
    }
  }
}

ModelKind parse_model_kind(std::string_view text) {
  if (text == "path") return ModelKind::path;
  if (text == "er") return ModelKind::er;
  if (text == "cer") return ModelKind::cer;
  throw ConfigError("model must be one of path, er, cer; got '" + std::string(text) + "'");
}

void ModelSpec::validate() const {
  if (n == 0) throw ConfigError("model needs n >= 1");
  if (kind == ModelKind::path) return;
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("edge probability outside [0, 1]");
  if (kind == ModelKind::cer) {
    if (blocks == 0 || blocks > n) throw ConfigError("block count must be in [1, n]");
    if (!(inter_prob >= 0.0 && inter_prob <= 1.0)) {
      throw ConfigError("inter-block probability outside [0, 1]");
    }
    if (!(inter_prob < p)) {
      throw ConfigError("inter-block probability must be below the intra-block probability");
    }
  }
}

Graph build_graph(const ModelSpec& spec, std::uint64_t graph_seed,
                  std::optional<PlantedModel>* planted) {
  spec.validate();
  switch (spec.kind) {
    case ModelKind::path:
      return gen_path(spec.n);
    case ModelKind::er:
      return gen_er(spec.n, spec.p, graph_seed);
    case ModelKind::cer: {
      auto model = PlantedModel::equal_blocks(spec.n, spec.blocks, spec.p, spec.inter_prob);
      Graph g = gen_clustered_er(model, graph_seed);
      if (planted != nullptr) *planted = std::move(model);
      return g;
    }
  }
  throw ConfigError("unknown model kind");
}

SingleRunOutcome run_on_graph(Graph g, LabelState s0, const RunOptions& options,
                              std::optional<std::vector<std::uint32_t>> planted_block_of) {
  if (planted_block_of && planted_block_of->size() != g.num_nodes()) {
    throw ConfigError("planted partition size does not match the graph");
  }
  SingleRunOutcome outcome;
  outcome.graph = std::move(g);
  outcome.connected = is_connected(outcome.graph);
  outcome.initial = std::move(s0);
  outcome.result = run(outcome.graph, outcome.initial, options);
  outcome.communities = extract_communities(outcome.graph, outcome.result.final_state());
  if (planted_block_of) {
    outcome.recovery = assess_recovery(outcome.graph, outcome.result, *planted_block_of);
  }
  outcome.planted_block_of = std::move(planted_block_of);
  return outcome;
}

SingleRunOutcome run_single(const ModelSpec& spec, const Seed& seed,
                            std::optional<std::vector<Label>> labels, const RunOptions& options) {
  std::optional<PlantedModel> planted;
  Graph g = build_graph(spec, seed.graph_seed, &planted);
  LabelState s0;
  if (labels) {
    if (labels->size() != g.num_nodes()) {
      throw ConfigError("label file has " + std::to_string(labels->size()) + " labels for " +
                        std::to_string(g.num_nodes()) + " nodes");
    }
    s0 = make_initial_state(std::move(*labels));
  } else {
    s0 = init_labels(g.num_nodes(), seed.label_seed);
  }
  std::optional<std::vector<std::uint32_t>> block_of;
  if (planted) block_of = planted->block_of;
  return run_on_graph(std::move(g), std::move(s0), options, std::move(block_of));
}

void write_run_report(std::ostream& out, const SingleRunOutcome& outcome) {
  const auto& result = outcome.result;
  out << "nodes " << outcome.graph.num_nodes() << '\n';
  out << "edges " << outcome.graph.num_edges() << '\n';
  out << "connected " << (outcome.connected ? "true" : "false") << '\n';
  out << "rounds " << result.t_star << '\n';
  out << "period " << result.period << '\n';
  out << "truncated " << (result.truncated ? "true" : "false") << '\n';
  out << "communities " << outcome.communities.size() << '\n';
  for (const auto& community : outcome.communities) {
    out << "community label=" << community.label << " size=" << community.members.size()
        << " connected=" << (community.connected ? "true" : "false") << " members";
    for (NodeId v : community.members) out << ' ' << v;
    out << '\n';
  }
  if (result.period == 2) {
    out << "oscillating";
    for (NodeId v : result.oscillating_nodes()) out << ' ' << v;
    out << '\n';
  }
  if (outcome.recovery) {
    out << "exact_recovery " << (outcome.recovery->exact_match ? "true" : "false") << '\n';
  }
}

}  // namespace maxlpa
