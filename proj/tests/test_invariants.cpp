#include <doctest.h>

#include <random>

#include "abc/enumerator.hpp"
#include "abc/error.hpp"
#include "abc/invariants.hpp"
#include "oracles.hpp"

using namespace abc;

TEST_CASE("connectivity") {
  CHECK(is_connected(path(5)));
  CHECK_FALSE(is_connected(disjoint_union(complete(1), complete(1))));
  CHECK(is_connected(join(empty(3), empty(4))));
  CHECK(is_connected(complete(1)));
}

TEST_CASE("independence number examples") {
  CHECK(independence_number(complete(5)) == 1);
  CHECK(independence_number(star(6)) == 5);
  CHECK(independence_number(cycle(5)) == 2);
  CHECK(independence_number(empty(32)) == 32);
}

TEST_CASE("chromatic number examples") {
  CHECK(chromatic_number(complete(4)) == 4);
  CHECK(chromatic_number(cycle(5)) == 3);
  CHECK(chromatic_number(join(empty(3), empty(3))) == 2);
  CHECK(chromatic_number(empty(4)) == 1);
}

TEST_CASE("edge connectivity examples") {
  CHECK(edge_connectivity(complete(5)) == 4);
  CHECK(edge_connectivity(cycle(6)) == 2);
  CHECK(edge_connectivity(star(5)) == 1);
  CHECK(edge_connectivity(disjoint_union(complete(3), complete(3))) == 0);
  CHECK(edge_connectivity(complete(1)) == 0);
  // Two K4 joined by a two-edge bridge: min degree 3 but cut of 2.
  const Graph barbell = Graph::from_edges(
      8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}, {0, 4}, {1, 5}});
  CHECK(edge_connectivity(barbell) == 2);
}

TEST_CASE("pendant count examples") {
  CHECK(pendant_count(star(7)) == 6);
  CHECK(pendant_count(complete(4)) == 0);
  CHECK(pendant_count(path(4)) == 2);
}

TEST_CASE("complete graphs have the textbook invariants") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(independence_number(complete(n)) == 1);
    CHECK(chromatic_number(complete(n)) == n);
    CHECK(edge_connectivity(complete(n)) == n - 1);
  }
}

TEST_CASE("complete bipartite joins") {
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      const Graph g = join(empty(a), empty(b));
      CHECK(independence_number(g) == std::max(a, b));
      CHECK(chromatic_number(g) == 2);
    }
}

TEST_CASE("invariants agree with brute-force oracles on every connected graph with n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    EnumerationTask task;
    task.n = n;
    for_each_connected(task, [&](const Graph& g) {
      REQUIRE(independence_number(g) == oracle::independence_number(g));
      REQUIRE(chromatic_number(g) == oracle::chromatic_number(g));
      REQUIRE(edge_connectivity(g) == oracle::edge_connectivity(g));
      REQUIRE(edge_connectivity(g) <= g.min_degree());
    });
  }
}

TEST_CASE("invariants agree with oracles on random graphs up to 8 vertices") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 7;
    const Graph g = oracle::random_graph(rng, n, 0.2 + 0.6 * (trial % 5) / 4.0);
    CAPTURE(trial);
    CHECK(independence_number(g) == oracle::independence_number(g));
    CHECK(chromatic_number(g) == oracle::chromatic_number(g));
    CHECK(edge_connectivity(g) == oracle::edge_connectivity(g));
    CHECK(chromatic_number(g) <= n);
  }
}

TEST_CASE("invariants are permutation invariant") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 9;
    const Graph g = oracle::random_graph(rng, n, 0.45);
    const Graph h = g.relabeled(oracle::random_permutation(rng, n));
    for (auto kind : {Invariant::independence, Invariant::pendant, Invariant::edge_connectivity, Invariant::chromatic})
      CHECK(measure(g, kind) == measure(h, kind));
  }
}

TEST_CASE("chromatic number 2 exactly for graphs with an edge and no odd cycle") {
  EnumerationTask task;
  task.n = 6;
  for_each_connected(task, [&](const Graph& g) {
    // Bipartite check by BFS 2-coloring.
    std::vector<int> side(6, -1);
    side[0] = 0;
    bool bipartite = true;
    for (int changed = 1; changed;) {
      changed = 0;
      for (const auto& [u, v] : g.edges()) {
        auto& su = side[static_cast<std::size_t>(u)];
        auto& sv = side[static_cast<std::size_t>(v)];
        if (su >= 0 && sv < 0) sv = 1 - su, changed = 1;
        else if (sv >= 0 && su < 0) su = 1 - sv, changed = 1;
        else if (su >= 0 && su == sv) bipartite = false;
      }
    }
    REQUIRE((chromatic_number(g) == 2) == bipartite);
  });
}

TEST_CASE("isomorphism examples") {
  std::mt19937 rng(5);
  const Graph c5 = cycle(5);
  for (int i = 0; i < 10; ++i) CHECK(is_isomorphic(c5, c5.relabeled(oracle::random_permutation(rng, 5))));
  CHECK_FALSE(is_isomorphic(star(4), path(4)));

  Graph manual = disjoint_union(empty(2), complete(3));
  for (int u = 0; u < 2; ++u)
    for (int v = 2; v < 5; ++v) manual = manual.with_edge(u, v);
  CHECK(is_isomorphic(join(empty(2), complete(3)), manual));
  CHECK(oracle::isomorphic(join(empty(2), complete(3)), manual));
}

TEST_CASE("isomorphism agrees with permutation search") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 5;
    const Graph g = oracle::random_graph(rng, n, 0.5);
    // Half the time compare with a relabeled copy, otherwise with a fresh
    // graph of the same order and edge count.
    Graph h = g.relabeled(oracle::random_permutation(rng, n));
    if (trial % 2) {
      do h = oracle::random_graph(rng, n, 0.5);
      while (h.edge_count() != g.edge_count());
    }
    CHECK(is_isomorphic(g, h) == oracle::isomorphic(g, h));
  }
}

TEST_CASE("isomorphism separates regular graphs refinement cannot split") {
  // C6 and two disjoint triangles are both 2-regular on 6 vertices.
  CHECK_FALSE(is_isomorphic(cycle(6), disjoint_union(complete(3), complete(3))));
  // The prism and K_{3,3} are both 3-regular on 6 vertices.
  const Graph prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK_FALSE(is_isomorphic(prism, join(empty(3), empty(3))));
  std::mt19937 rng(3);
  CHECK(is_isomorphic(prism, prism.relabeled(oracle::random_permutation(rng, 6))));
}

TEST_CASE("isomorphism is an equivalence relation on a sample") {
  std::mt19937 rng(77);
  std::vector<Graph> sample;
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(rng, 5, 0.5);
    sample.push_back(g);
    sample.push_back(g.relabeled(oracle::random_permutation(rng, 5)));
  }
  for (const auto& a : sample) {
    CHECK(is_isomorphic(a, a));
    for (const auto& b : sample) {
      CHECK(is_isomorphic(a, b) == is_isomorphic(b, a));
      if (!is_isomorphic(a, b)) continue;
      for (const auto& c : sample)
        if (is_isomorphic(b, c)) CHECK(is_isomorphic(a, c));
    }
  }
}

TEST_CASE("constraint parsing and validation") {
  CHECK(parse_invariant("edge_connectivity") == Invariant::edge_connectivity);
  CHECK_FALSE(parse_invariant("girth").has_value());
  CHECK_THROWS_AS(ParamConstraint::make(Invariant::pendant, 0), DomainError);
  CHECK(ParamConstraint::make(Invariant::edge_connectivity, 1).value == 1);
  CHECK(satisfies(star(5), ParamConstraint::make(Invariant::pendant, 4)));
}
