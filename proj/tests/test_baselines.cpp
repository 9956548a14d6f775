#include <cmath>
#include <numeric>

#include "cliqster/baselines.hpp"
#include "cliqster/decompose.hpp"
#include "cliqster/synth.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cliqster;
using namespace cliqster::test;

TEST_CASE("spectrum of a complete graph") {
  const auto s = svd_spectrum(complete_graph(5));
  REQUIRE(s.size() == 5);
  CHECK(s[0] == doctest::Approx(4.0));
  for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] == doctest::Approx(1.0));
}

TEST_CASE("spectrum of an edgeless graph is zero") {
  const auto s = svd_spectrum(Graph::from_edges(6, {}));
  for (double v : s) CHECK(v == 0.0);
}

TEST_CASE("spectrum of a four-leaf star") {
  const Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const auto s = svd_spectrum(star);
  CHECK(s[0] == doctest::Approx(2.0));
  CHECK(s[1] == doctest::Approx(2.0));
  CHECK(s[2] == doctest::Approx(0.0));
  CHECK(s[3] == doctest::Approx(0.0));
  CHECK(s[4] == doctest::Approx(0.0));
}

TEST_CASE("feature vectors truncate and pad the spectrum") {
  const auto k4 = svd_feature_vector(complete_graph(4), 3);
  CHECK(k4[0] == doctest::Approx(3.0));
  CHECK(k4[1] == doctest::Approx(1.0));
  CHECK(k4[2] == doctest::Approx(1.0));

  const auto edge = svd_feature_vector(Graph::from_edges(2, {{0, 1}}), 4);
  CHECK(edge[0] == doctest::Approx(1.0));
  CHECK(edge[1] == doctest::Approx(1.0));
  CHECK(edge[2] == 0.0);
  CHECK(edge[3] == 0.0);

  const auto empty = svd_feature_vector(Graph::from_edges(3, {}), 6);
  for (double v : empty) CHECK(v == 0.0);
}

TEST_CASE("dense cap is enforced") {
  CHECK_THROWS_AS(svd_spectrum(Graph::from_edges(10, {{0, 1}}), 8),
                  std::runtime_error);
}

TEST_CASE("spectrum is invariant under vertex permutation") {
  const Graph g = erdos_renyi(12, 0.4, 19);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> perm = {7, 3, 11, 0, 9, 1, 10, 4, 2, 8, 6, 5};
  for (auto [u, v] : g.edges())
    edges.emplace_back(perm[static_cast<std::size_t>(u)],
                       perm[static_cast<std::size_t>(v)]);
  const Graph h = Graph::from_edges(12, edges);
  const auto a = svd_spectrum(g);
  const auto b = svd_spectrum(h);
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-9));
}

TEST_CASE("squared singular values sum to twice the edge count") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = erdos_renyi(15, 0.35, 60 + seed);
    const auto s = svd_spectrum(g);
    const double frob = std::inner_product(s.begin(), s.end(), s.begin(), 0.0);
    const double expected = 2.0 * static_cast<double>(g.edge_count());
    CHECK(frob == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("svd keeps many more effective components than the clique basis") {
  // On synthetic category samples the clique representation is much more
  // compact than the spectrum's effective rank.
  auto profile = profile_by_name("SI", 10.0);
  const Graph mother = generate(profile, 5);
  const Graph g = sample_induced(mother, 300, 6);

  const auto spectrum = svd_spectrum(g);
  std::size_t effective_rank = 0;
  for (double v : spectrum)
    if (v > 0.0) ++effective_rank;

  const auto basis = build_basis(g);
  CHECK(effective_rank > basis.basis_count());
}

TEST_CASE("decomposer registry") {
  const auto c = make_decomposer("cliqster");
  const auto s = make_decomposer("svd");
  CHECK(c->name() == "cliqster");
  CHECK(s->name() == "svd");
  CHECK_THROWS_AS(make_decomposer("graphlet"), std::invalid_argument);

  const Graph g = figure1_graph();
  const auto fc = c->features(g, 20);
  const auto fs = s->features(g, 20);
  CHECK(fc.size() == 20);
  CHECK(fs.size() == 20);
  CHECK(fc[0] == doctest::Approx(1.0));
}
