// maxlpa: generate graphs, run Max-LPA once, or run seeded trial batteries.
//
//   maxlpa generate --model er --n 1000 --c 1.5 --seed 7 --out g.txt
//   maxlpa run --model path --n 5 --labels labels.txt --trajectory traj.txt
//   maxlpa table1 --n 1000 --n 2000 --c 1 --c 1.5 --trials 50 --out t1.csv
//   maxlpa table2 --n 8000 --c 1.5 --p-prime 0.6/n --out t2.csv
//   maxlpa rounds --c 1.2 --c 1.5 --plot rounds.dat --out rounds.csv
//   maxlpa check-conditions --n 1000000 --blocks 2 --p 0.01 --p-prime 1e-4 --c 1

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "maxlpa/analysis.hpp"
#include "maxlpa/errors.hpp"
#include "maxlpa/experiment.hpp"
#include "maxlpa/graph_io.hpp"
#include "maxlpa/seeding.hpp"

namespace {

using namespace maxlpa;

const std::vector<std::size_t> kPaperSizes = {1000,  2000,  4000,   8000,
                                              16000, 32000, 64000, 128000};

struct ModelArgs {
  std::string model = "path";
  std::size_t n = 0;
  std::optional<double> p;
  std::optional<double> c;
  std::size_t blocks = 2;
  std::string p_prime = "0.6/n";
  std::string log_base = "2";

  void add_to(CLI::App& app) {
    app.add_option("--model", model, "path | er | cer")->check(CLI::IsMember({"path", "er", "cer"}));
    app.add_option("--n", n, "Number of nodes");
    app.add_option("--p", p, "Edge (intra-block) probability");
    app.add_option("--c", c, "Use p = c*log(n)/n instead of --p");
    app.add_option("--blocks", blocks, "Equal-size planted blocks (cer)");
    app.add_option("--p-prime", p_prime, "Inter-block probability: value or <coef>/n (cer)");
    app.add_option("--log-base", log_base, "Logarithm for --c: 2 or e");
  }

  ModelSpec spec() const {
    ModelSpec spec;
    spec.kind = parse_model_kind(model);
    spec.n = n;
    if (spec.kind != ModelKind::path) {
      if (p.has_value() == c.has_value()) throw ConfigError("give exactly one of --p and --c");
      spec.p = p ? *p : sparse_edge_probability(n, *c, parse_log_base(log_base));
    }
    spec.blocks = blocks;
    spec.inter_prob = InterProbRule::parse(p_prime).resolve(n);
    return spec;
  }
};

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
    stream = &file;
  }
  std::ostream& operator*() { return *stream; }
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

Seed seeds_from(std::uint64_t base, std::optional<std::uint64_t> graph_seed,
                std::optional<std::uint64_t> label_seed) {
  return Seed{graph_seed.value_or(mix_seed(base, 0)), label_seed.value_or(mix_seed(base, 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-LPA label propagation: graphs, single runs and trial batteries"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Sample a graph and write it in text form");
  ModelArgs gen_model;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  std::string gen_blocks_out;
  gen_model.add_to(*generate);
  generate->add_option("--seed", gen_seed, "Graph seed");
  generate->add_option("--out", gen_out, "Graph file (default stdout)");
  generate->add_option("--partition-out", gen_blocks_out, "Planted-partition sidecar (cer)");

  // run
  auto* run_cmd = app.add_subcommand("run", "One fully logged run");
  ModelArgs run_model;
  std::string graph_file;
  std::string partition_file;
  std::string labels_file;
  std::string trajectory_file;
  std::string run_out;
  std::uint64_t run_seed = 1;
  std::optional<std::uint64_t> graph_seed;
  std::optional<std::uint64_t> label_seed;
  std::size_t run_max_rounds = 0;
  run_model.add_to(*run_cmd);
  run_cmd->add_option("--graph", graph_file, "Read the graph from a file instead of --model");
  run_cmd->add_option("--partition", partition_file, "Planted-partition sidecar for --graph");
  run_cmd->add_option("--labels", labels_file, "Initial labels (distinct integers, one per node)");
  run_cmd->add_option("--seed", run_seed, "Base seed for graph and labels");
  run_cmd->add_option("--graph-seed", graph_seed, "Override the graph seed");
  run_cmd->add_option("--label-seed", label_seed, "Override the label seed");
  run_cmd->add_option("--max-rounds", run_max_rounds, "Round limit (default 4n+16)");
  run_cmd->add_option("--trajectory", trajectory_file, "Write every round's labels to this file");
  run_cmd->add_option("--out", run_out, "Report file (default stdout)");

  // table1 / table2 / rounds
  struct BatteryArgs {
    std::vector<std::size_t> n;
    std::vector<double> c;
    std::size_t trials = 50;
    std::uint64_t seed = 1;
    std::string p_prime = "0.6/n";
    std::string log_base = "2";
    std::size_t max_rounds = 0;
    std::size_t threads = 1;
    std::string out;
    std::string plot;
  };
  BatteryArgs battery;
  auto add_battery = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--n", battery.n, "Node counts (repeatable)");
    cmd->add_option("--c", battery.c, "Density constants, p = c*log(n)/n (repeatable)");
    cmd->add_option("--trials", battery.trials, "Trials per (n, c) cell");
    cmd->add_option("--seed", battery.seed, "Base seed");
    cmd->add_option("--p-prime", battery.p_prime, "Inter-block probability: value or <coef>/n");
    cmd->add_option("--log-base", battery.log_base, "Logarithm in p: 2 or e");
    cmd->add_option("--max-rounds", battery.max_rounds, "Round limit (default 4n+16)");
    cmd->add_option("--threads", battery.threads, "Worker threads (0 = all cores)");
    cmd->add_option("--out", battery.out, "Per-trial CSV (default stdout)");
    cmd->add_option("--plot", battery.plot, "Plot data file (rounds only)");
    return cmd;
  };
  auto* table1 = add_battery("table1", "Single-community counts on sparse G(n, p)");
  auto* table2 = add_battery("table2", "Exact recovery on two-block clustered G(n, p)");
  auto* rounds = add_battery("rounds", "Mean rounds to a single community on sparse G(n, p)");

  // check-conditions
  auto* check = app.add_subcommand("check-conditions",
                                   "Evaluate the two-round recovery conditions per block");
  std::size_t check_n = 0;
  std::size_t check_blocks = 2;
  double check_p = 0.0;
  std::string check_p_prime;
  double check_c = 0.0;
  check->add_option("--n", check_n, "Total nodes")->required();
  check->add_option("--blocks", check_blocks, "Equal-size blocks");
  check->add_option("--p", check_p, "Intra-block probability")->required();
  check->add_option("--p-prime", check_p_prime, "Inter-block probability: value or <coef>/n")
      ->required();
  check->add_option("--c", check_c, "Constant in the density condition")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      std::optional<PlantedModel> planted;
      const Graph g = build_graph(gen_model.spec(), gen_seed, &planted);
      Output out(gen_out);
      write_graph(*out, g);
      if (planted) {
        std::string path = gen_blocks_out;
        if (path.empty() && !gen_out.empty() && gen_out != "-") path = gen_out + ".blocks";
        if (!path.empty()) {
          Output sidecar(path);
          write_block_sidecar(*sidecar, *planted);
        }
      }
      return 0;
    }

    if (*run_cmd) {
      RunOptions options;
      options.max_rounds = run_max_rounds;
      options.keep_history = !trajectory_file.empty();
      const Seed seed = seeds_from(run_seed, graph_seed, label_seed);
      std::optional<std::vector<Label>> labels;
      if (!labels_file.empty()) {
        auto in = open_input(labels_file);
        labels = read_labels(in);
      }

      SingleRunOutcome outcome;
      if (!graph_file.empty()) {
        auto in = open_input(graph_file);
        Graph g = read_graph(in);
        std::optional<std::vector<std::uint32_t>> block_of;
        if (!partition_file.empty()) {
          auto sidecar = open_input(partition_file);
          block_of = read_block_sidecar(sidecar, g.num_nodes());
        }
        LabelState s0;
        if (labels) {
          if (labels->size() != g.num_nodes()) {
            throw ConfigError("label file size does not match the graph");
          }
          s0 = make_initial_state(std::move(*labels));
        } else {
          s0 = init_labels(g.num_nodes(), seed.label_seed);
        }
        outcome = run_on_graph(std::move(g), std::move(s0), options, std::move(block_of));
      } else {
        outcome = run_single(run_model.spec(), seed, std::move(labels), options);
      }

      Output out(run_out);
      write_run_report(*out, outcome);
      if (!trajectory_file.empty()) {
        Output trajectory(trajectory_file);
        write_trajectory(*trajectory, outcome.result.history);
      }
      return outcome.result.truncated ? 3 : 0;
    }

    if (*table1 || *table2 || *rounds) {
      ExperimentConfig config;
      config.kind = *table1 ? ExperimentKind::table1
                  : *table2 ? ExperimentKind::table2
                            : ExperimentKind::rounds_figure;
      config.n_values = battery.n.empty() ? kPaperSizes : battery.n;
      if (battery.c.empty()) {
        config.c_values = config.kind == ExperimentKind::table1   ? std::vector{1.0, 1.2, 1.5, 1.7}
                          : config.kind == ExperimentKind::table2 ? std::vector{1.5, 2.0, 4.0}
                                                                  : std::vector{1.0, 1.2, 1.5};
      } else {
        config.c_values = battery.c;
      }
      config.trials = battery.trials;
      config.base_seed = battery.seed;
      config.inter_prob = InterProbRule::parse(battery.p_prime);
      config.log_base = parse_log_base(battery.log_base);
      config.max_rounds = battery.max_rounds;
      config.threads = battery.threads;
      config.validate();

      const ExperimentReport report = run_experiment(config);
      const bool csv_to_stdout = battery.out.empty() || battery.out == "-";
      Output csv(battery.out);
      write_csv(*csv, report.records);
      std::ostream& summary = csv_to_stdout ? std::cerr : std::cout;
      write_summary(summary, report);
      if (config.kind == ExperimentKind::rounds_figure) {
        if (battery.plot.empty()) {
          write_plot_data(summary, report);
        } else {
          Output plot(battery.plot);
          write_plot_data(*plot, report);
        }
      }
      return 0;
    }

    if (*check) {
      const double inter = InterProbRule::parse(check_p_prime).resolve(check_n);
      const auto model = PlantedModel::equal_blocks(check_n, check_blocks, check_p, inter);
      std::cout << "block,n_i,p_i,sep_lhs,sep_rhs,sep_holds,sep_margin,dens_lhs,dens_rhs,"
                   "dens_holds,dens_margin\n";
      bool all = true;
      for (const auto& cond : recovery_conditions(model, check_c, check_n)) {
        std::cout << cond.block << ',' << cond.block_size << ',' << format_number(cond.intra_prob)
                  << ',' << format_number(cond.separation_lhs) << ','
                  << format_number(cond.separation_rhs) << ','
                  << (cond.separation_holds ? "true" : "false") << ','
                  << format_number(cond.separation_margin()) << ','
                  << format_number(cond.density_lhs) << ',' << format_number(cond.density_rhs)
                  << ',' << (cond.density_holds ? "true" : "false") << ','
                  << format_number(cond.density_margin()) << '\n';
        all = all && cond.holds();
      }
      std::cerr << (all ? "all conditions hold\n" : "some conditions fail\n");
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidParameter& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
