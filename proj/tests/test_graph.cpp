#include <algorithm>
#include <set>

#include "cliqster/graph.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cliqster;
using namespace cliqster::test;

TEST_CASE("edge-list parsing interns tokens in first-appearance order") {
  const Graph g = from_edge_list_text("1 2\n2 3\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.token(0) == "1");
  CHECK(g.token(2) == "3");
}

TEST_CASE("edge-list parsing deduplicates reversed duplicates") {
  const Graph g = from_edge_list_text("a b\nb a\na b\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("edge-list parsing rejects self-loops with the line number") {
  CHECK_THROWS_WITH_AS(from_edge_list_text("a b\nx x\n"),
                       doctest::Contains("line 2"), std::runtime_error);
}

TEST_CASE("edge-list parsing rejects malformed lines with the line number") {
  CHECK_THROWS_WITH_AS(from_edge_list_text("a b c\n"),
                       doctest::Contains("line 1"), std::runtime_error);
  CHECK_THROWS_AS(from_edge_list_text("lonely\n"), std::runtime_error);
}

TEST_CASE("comments and blank lines are skipped") {
  const Graph g = from_edge_list_text("# header\n\n1 2\n  # indented? no: tokens\n");
  // The indented line starts with '#' after trimming, so it is a comment.
  CHECK(g.edge_count() == 1);
}

TEST_CASE("vertex-count padding adds isolated vertices with fresh labels") {
  const Graph g = from_edge_list_text("a b\n", 4);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(2) == 0);
  CHECK_THROWS_AS(from_edge_list_text("a b\nc d\n", 3), std::runtime_error);
}

TEST_CASE("round-trip through the text format preserves the edge set") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = erdos_renyi(10, 0.4, 1000 + static_cast<std::uint64_t>(trial));
    if (g.edge_count() == 0) continue;
    const Graph h = from_edge_list_text(to_edge_list_text(g));
    REQUIRE(h.edge_count() == g.edge_count());
    // Tokens survive, so the edge sets match after mapping back. Internal
    // ids differ between the two graphs, so normalize each pair by token.
    const auto token_pairs = [](const Graph& gr) {
      std::set<std::pair<std::string, std::string>> out;
      for (auto [u, v] : gr.edges())
        out.insert(std::minmax(gr.token(u), gr.token(v)));
      return out;
    };
    CHECK(token_pairs(g) == token_pairs(h));
  }
}

TEST_CASE("induced subgraph keeps exactly the internal edges") {
  const Graph tri = complete_graph(3);
  const std::vector<int> sel = {0, 1};
  CHECK(induced_subgraph(tri, sel).edge_count() == 1);

  const Graph c5 = cycle_graph(5);
  const std::vector<int> path_sel = {0, 1, 2};
  const Graph path = induced_subgraph(c5, path_sel);
  CHECK(path.vertex_count() == 3);
  CHECK(path.edge_count() == 2);

  SUBCASE("selecting every vertex yields an isomorphic copy") {
    const Graph g = figure1_graph();
    std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
    CHECK(induced_subgraph(g, all).edge_count() == g.edge_count());
  }

  SUBCASE("out-of-range vertex is rejected") {
    const std::vector<int> bad = {0, 5};
    CHECK_THROWS_AS(induced_subgraph(tri, bad), std::invalid_argument);
  }
}

TEST_CASE("induced edge count matches a brute-force pair scan") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = erdos_renyi(12, 0.4, 500 + seed);
    Rng rng(seed);
    const auto sel = rng.sample_without_replacement(12, 6);
    const Graph sub = induced_subgraph(g, sel);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < sel.size(); ++i)
      for (std::size_t j = i + 1; j < sel.size(); ++j)
        if (g.has_edge(sel[i], sel[j])) ++expected;
    CHECK(sub.edge_count() == expected);
  }
}

TEST_CASE("sample_induced is deterministic and complete at full size") {
  const Graph g = figure1_graph();
  const Graph full = sample_induced(g, g.vertex_count(), 3);
  CHECK(full.edge_count() == g.edge_count());

  const Graph a = sample_induced(g, 5, 42);
  const Graph b = sample_induced(g, 5, 42);
  CHECK(to_edge_list_text(a) == to_edge_list_text(b));
}

TEST_CASE("samples of a complete graph are complete") {
  const Graph k10 = complete_graph(10);
  const Graph s = sample_induced(k10, 4, 9);
  CHECK(s.vertex_count() == 4);
  CHECK(s.edge_count() == 6);
}

TEST_CASE("sample_induced rejects oversized and hopeless requests") {
  const Graph g = figure1_graph();
  CHECK_THROWS_AS(sample_induced(g, 11, 0), std::invalid_argument);
  // A single vertex can never contain an edge, so the retry budget runs out.
  CHECK_THROWS_WITH_AS(sample_induced(g, 1, 0), doctest::Contains("25"),
                       std::runtime_error);
}

TEST_CASE("connected components partition the vertex set") {
  const Graph two_tri = Graph::from_edges(
      6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  const auto comps = connected_components(two_tri);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 3);
  CHECK(comps[1].size() == 3);

  const Graph edgeless = Graph::from_edges(5, {});
  CHECK(connected_components(edgeless).size() == 5);

  CHECK(connected_components(figure1_graph()).size() == 1);

  SUBCASE("partition covers every vertex exactly once") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const Graph g = erdos_renyi(15, 0.12, seed);
      std::vector<int> seen;
      for (const auto& comp : connected_components(g))
        seen.insert(seen.end(), comp.begin(), comp.end());
      std::sort(seen.begin(), seen.end());
      REQUIRE(seen.size() == 15);
      for (int v = 0; v < 15; ++v) CHECK(seen[static_cast<std::size_t>(v)] == v);
    }
  }
}

TEST_CASE("density") {
  CHECK(density(complete_graph(4)) == doctest::Approx(1.0));
  CHECK(density(Graph::from_edges(10, {})) == doctest::Approx(0.0));
  CHECK(density(figure1_graph()) == doctest::Approx(14.0 / 45.0));
  CHECK_THROWS_AS(density(Graph::from_edges(1, {})), std::invalid_argument);
}

TEST_CASE("degeneracy of standard graphs") {
  CHECK(degeneracy_ordering(complete_graph(6)).degeneracy == 5);
  const Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(degeneracy_ordering(star).degeneracy == 1);
  const Graph path = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(degeneracy_ordering(path).degeneracy == 1);
  CHECK(degeneracy_ordering(cycle_graph(5)).degeneracy == 2);
}

TEST_CASE("degeneracy ordering invariants") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = erdos_renyi(14, 0.3, 40 + seed);
    const auto res = degeneracy_ordering(g);
    REQUIRE(res.ordering.size() == 14);
    CHECK(res.degeneracy <= g.max_degree());

    // Each vertex has at most f neighbors later in the ordering.
    for (int v = 0; v < 14; ++v) {
      int later = 0;
      for (int u : g.neighbors(v))
        if (res.position[static_cast<std::size_t>(u)] >
            res.position[static_cast<std::size_t>(v)])
          ++later;
      CHECK(later <= res.degeneracy);
    }

    // Induced subgraphs cannot be more degenerate.
    Rng rng(seed);
    const auto sel = rng.sample_without_replacement(14, 8);
    CHECK(degeneracy_ordering(induced_subgraph(g, sel)).degeneracy <=
          res.degeneracy);
  }
}
