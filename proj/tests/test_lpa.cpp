#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "maxlpa/errors.hpp"
#include "maxlpa/generators.hpp"
#include "maxlpa/lpa.hpp"
#include "maxlpa/worker_pool.hpp"
#include "oracle/reference_lpa.hpp"

using namespace maxlpa;

namespace {

LabelState state_of(std::vector<Label> labels) { return make_initial_state(std::move(labels)); }

oracle::DenseGraph dense_copy(const Graph& g) {
  oracle::DenseGraph d(g.num_nodes());
  for (const auto& [u, v] : g.edges()) d.add_edge(u, v);
  return d;
}

Graph complete_graph(std::size_t n) {
  EdgeList edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_SUITE("labels") {
  TEST_CASE("init_labels is a permutation of 1..n and deterministic") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const LabelState s = init_labels(50, seed);
      CHECK(s.round == 0);
      std::vector<Label> sorted = s.labels;
      std::sort(sorted.begin(), sorted.end());
      std::vector<Label> expected(50);
      std::iota(expected.begin(), expected.end(), Label{1});
      CHECK(sorted == expected);
      CHECK(init_labels(50, seed) == s);
    }
    CHECK(init_labels(0, 1).labels.empty());
  }

  TEST_CASE("init_labels rank of a fixed node is uniform") {
    // The argmax position of 5 labels is uniform: each node 1/5 +- 0.01.
    std::array<int, 5> argmax{};
    const int seeds = 100000;
    for (int s = 0; s < seeds; ++s) {
      const auto labels = init_labels(5, static_cast<std::uint64_t>(s)).labels;
      ++argmax[static_cast<std::size_t>(
          std::max_element(labels.begin(), labels.end()) - labels.begin())];
    }
    for (int count : argmax) CHECK(std::abs(count / double(seeds) - 0.2) <= 0.01);
  }

  TEST_CASE("make_initial_state rejects repeated labels") {
    CHECK_THROWS_AS(make_initial_state({1, 2, 1}), InvalidParameter);
    CHECK_NOTHROW(make_initial_state({9, 2, 100}));
  }
}

TEST_SUITE("step") {
  TEST_CASE("isolated node keeps its label") {
    const Graph g = Graph::from_edges(1, {});
    CHECK(step(g, state_of({7})).labels == std::vector<Label>{7});
  }

  TEST_CASE("complete graph adopts the maximum in one round") {
    const Graph k6 = complete_graph(6);
    const LabelState s1 = step(k6, state_of({3, 9, 1, 4, 6, 2}));
    CHECK(s1.labels == std::vector<Label>(6, 9));
    CHECK(s1.round == 1);
  }

  TEST_CASE("P_5 example") {
    // Order pattern of (0.1, 0.5, 0.3, 0.9, 0.2).
    const Graph p5 = gen_path(5);
    const LabelState s1 = step(p5, state_of({1, 4, 3, 5, 2}));
    CHECK(s1.labels == std::vector<Label>{4, 4, 5, 5, 5});
    CHECK(step(p5, s1).labels == s1.labels);
  }

  TEST_CASE("frequency beats magnitude") {
    // Star centre 0 with leaves labelled 5, 5, 9: label 5 occurs twice.
    const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    std::vector<Label> labels{1, 5, 5, 9};
    std::vector<Label> scratch;
    CHECK(update_label(star, labels, 0, scratch) == 5);
    // Leaf 3 sees {1, 9}: tie broken toward the larger label.
    CHECK(update_label(star, labels, 3, scratch) == 9);
  }

  TEST_CASE("size mismatch throws") {
    CHECK_THROWS_AS(step(gen_path(3), LabelState{{1, 2}, 0}), std::invalid_argument);
  }
}

TEST_SUITE("run") {
  TEST_CASE("run examples") {
    const RunResult p5 = run(gen_path(5), state_of({1, 4, 3, 5, 2}));
    CHECK(p5.t_star == 1);
    CHECK(p5.period == 1);
    CHECK_FALSE(p5.truncated);
    CHECK(p5.final_state().labels == std::vector<Label>{4, 4, 5, 5, 5});

    const RunResult kn = run(complete_graph(7), init_labels(7, 3));
    CHECK(kn.t_star == 1);
    CHECK(kn.period == 1);
    CHECK(kn.final_state().labels == std::vector<Label>(7, 7));

    const RunResult single = run(Graph::from_edges(1, {}), state_of({4}));
    CHECK(single.t_star == 0);
    CHECK(single.period == 1);
  }

  TEST_CASE("history holds states 0..t_star+period") {
    RunOptions options;
    options.keep_history = true;
    const RunResult r = run(gen_path(5), state_of({1, 4, 3, 5, 2}), options);
    REQUIRE(r.history.size() == r.t_star + static_cast<std::size_t>(r.period) + 1);
    for (std::size_t t = 0; t < r.history.size(); ++t) CHECK(r.history[t].round == t);
    std::ostringstream out;
    write_trajectory(out, r.history);
    CHECK(out.str() == "1 4 3 5 2\n4 4 5 5 5\n4 4 5 5 5\n");
    std::istringstream in(out.str());
    CHECK(read_trajectory(in).size() == 3);
  }

  TEST_CASE("observer sees every state in order") {
    std::vector<std::size_t> rounds;
    RunOptions options;
    options.observer = [&](const LabelState& s) { rounds.push_back(s.round); };
    const RunResult r = run(gen_er(80, 0.05, 4), init_labels(80, 5), options);
    REQUIRE_FALSE(rounds.empty());
    for (std::size_t t = 0; t < rounds.size(); ++t) CHECK(rounds[t] == t);
    CHECK(rounds.back() == r.t_star + static_cast<std::size_t>(r.period));
  }

  TEST_CASE("truncation") {
    RunOptions options;
    options.max_rounds = 1;
    const RunResult r = run(gen_path(40), init_labels(40, 8), options);
    CHECK(r.truncated);
    CHECK(r.period == 0);
    CHECK(r.t_star == 1);
    CHECK(r.final_states.size() == 2);
  }

  TEST_CASE("run rejects a state that is not round zero") {
    LabelState s = init_labels(5, 1);
    s.round = 3;
    CHECK_THROWS_AS(run(gen_path(5), s), std::invalid_argument);
  }

  TEST_CASE("period two on a crafted graph") {
    // Search random small graphs for a 2-cycle and check its bookkeeping
    // against the oracle.
    bool found = false;
    for (std::uint64_t seed = 0; seed < 20000 && !found; ++seed) {
      const Graph g = gen_er(8, 0.4, seed);
      const LabelState s0 = init_labels(8, seed + 77);
      const RunResult r = run(g, s0);
      if (r.period != 2) continue;
      found = true;
      const auto ref = oracle::reference_run(dense_copy(g), s0.labels, 100);
      CHECK(ref.period == 2);
      CHECK(ref.t_star == r.t_star);
      REQUIRE(r.final_states.size() == 2);
      CHECK(r.final_states[0].labels == ref.trajectory[r.t_star]);
      CHECK(r.final_states[1].labels == ref.trajectory[r.t_star + 1]);
      CHECK_FALSE(r.oscillating_nodes().empty());
    }
    if (!found) MESSAGE("no period-2 instance found in the sampled graphs");
  }
}

TEST_SUITE("properties") {
  TEST_CASE("engine matches the brute-force reference on random small graphs") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 3000; ++i) {
      const std::size_t n = 1 + rng() % 9;
      const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
      const Graph g = gen_er(n, p, rng());
      const LabelState s0 = init_labels(n, rng());
      const RunResult r = run(g, s0);
      const auto ref = oracle::reference_run(dense_copy(g), s0.labels, 4 * n + 16);
      REQUIRE(ref.period != 0);
      CHECK(r.t_star == ref.t_star);
      CHECK(r.period == static_cast<int>(ref.period));
      CHECK(r.final_state().labels == ref.trajectory[ref.t_star]);
    }
  }

  TEST_CASE("order isomorphism invariance") {
    // Replacing labels by any strictly increasing transform commutes with run.
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Graph g = gen_er(60, 0.07, seed);
      const LabelState s0 = init_labels(60, seed + 1000);
      auto transform = [](Label l) { return l * l * 1000 + 17; };
      std::vector<Label> mapped(s0.labels.size());
      std::transform(s0.labels.begin(), s0.labels.end(), mapped.begin(), transform);
      const RunResult a = run(g, s0);
      const RunResult b = run(g, state_of(mapped));
      CHECK(a.t_star == b.t_star);
      CHECK(a.period == b.period);
      std::vector<Label> expected(a.final_state().labels.size());
      std::transform(a.final_state().labels.begin(), a.final_state().labels.end(),
                     expected.begin(), transform);
      CHECK(b.final_state().labels == expected);
    }
  }

  TEST_CASE("node relabeling equivariance") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const std::size_t n = 70;
      const Graph g = gen_er(n, 0.06, seed);
      const LabelState s0 = init_labels(n, seed + 500);
      std::vector<NodeId> pi(n);
      std::iota(pi.begin(), pi.end(), NodeId{0});
      std::shuffle(pi.begin(), pi.end(), std::mt19937_64(seed));
      EdgeList moved;
      for (const auto& [u, v] : g.edges()) moved.emplace_back(pi[u], pi[v]);
      const Graph h = Graph::from_edges(n, moved);
      std::vector<Label> moved_labels(n);
      for (NodeId v = 0; v < n; ++v) moved_labels[pi[v]] = s0.labels[v];

      const RunResult a = run(g, s0);
      const RunResult b = run(h, state_of(moved_labels));
      CHECK(a.t_star == b.t_star);
      CHECK(a.period == b.period);
      for (NodeId v = 0; v < n; ++v) {
        CHECK(b.final_state().labels[pi[v]] == a.final_state().labels[v]);
      }
    }
  }

  TEST_CASE("fixed points are sound and labels are conserved") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Graph g = gen_er(120, 0.04, seed);
      const LabelState s0 = init_labels(120, seed * 3 + 1);
      std::set<Label> initial(s0.labels.begin(), s0.labels.end());
      RunOptions options;
      options.observer = [&](const LabelState& s) {
        for (Label l : s.labels) REQUIRE(initial.count(l) == 1);
      };
      const RunResult r = run(g, s0, options);
      REQUIRE_FALSE(r.truncated);
      if (r.period == 1) {
        CHECK(step(g, r.final_state()).labels == r.final_state().labels);
      } else {
        CHECK(step(g, r.final_states[0]).labels == r.final_states[1].labels);
        CHECK(step(g, r.final_states[1]).labels == r.final_states[0].labels);
      }
    }
  }

  TEST_CASE("results do not depend on the worker count") {
    const Graph g = gen_er(5000, 0.002, 9);
    const LabelState s0 = init_labels(5000, 10);
    RunOptions base;
    base.keep_history = true;
    const RunResult reference = run(g, s0, base);
    for (std::size_t threads : {2u, 3u, 8u}) {
      WorkerPool pool(threads);
      RunOptions options = base;
      options.pool = &pool;
      const RunResult r = run(g, s0, options);
      CHECK(r.t_star == reference.t_star);
      CHECK(r.history == reference.history);
    }
  }
}

TEST_SUITE("communities") {
  TEST_CASE("extract_communities groups by label in order of first member") {
    const Graph g = gen_path(6);
    const auto communities = extract_communities(g, LabelState{{8, 8, 3, 3, 8, 8}, 2});
    REQUIRE(communities.size() == 2);
    CHECK(communities[0].label == 8);
    CHECK(communities[0].members == std::vector<NodeId>{0, 1, 4, 5});
    CHECK_FALSE(communities[0].connected);
    CHECK(communities[1].label == 3);
    CHECK(communities[1].members == std::vector<NodeId>{2, 3});
    CHECK(communities[1].connected);
    CHECK(count_communities(std::vector<Label>{8, 8, 3, 3, 8, 8}) == 2);
  }

  TEST_CASE("read_labels") {
    std::istringstream in("5 3\n 1\n");
    CHECK(read_labels(in) == std::vector<Label>{5, 3, 1});
  }
}

TEST_SUITE("worker_pool") {
  TEST_CASE("covers every index exactly once and propagates errors") {
    WorkerPool pool(4);
    std::vector<int> hits(10007, 0);
    pool.parallel_for(hits.size(), [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) ++hits[i];
    });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK_THROWS_AS(pool.parallel_for(100,
                                      [](std::size_t b, std::size_t) {
                                        if (b == 0) throw std::runtime_error("boom");
                                      }),
                    std::runtime_error);
    pool.parallel_for(0, [](std::size_t, std::size_t) { FAIL("called on empty range"); });
  }
}
