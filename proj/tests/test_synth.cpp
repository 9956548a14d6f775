#include <cmath>

#include "cliqster/clique.hpp"
#include "cliqster/netstats.hpp"
#include "cliqster/synth.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace cliqster;
using namespace cliqster::test;

TEST_CASE("generation is deterministic per seed and varies across seeds") {
  const CategoryProfile p{"t", 2.2, 0.01, 1.0, 300, {4, 5, 6}};
  const Graph a = generate(p, 5);
  const Graph b = generate(p, 5);
  const Graph c = generate(p, 6);
  CHECK(to_edge_list_text(a) == to_edge_list_text(b));
  CHECK(to_edge_list_text(a) != to_edge_list_text(c));
}

TEST_CASE("realized density tracks the target") {
  const CategoryProfile p{"t", 2.5, 0.02, 1.0, 1000, {}};
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    total += density(generate(p, seed));
  const double mean = total / 20.0;
  CHECK(std::abs(mean - 0.02) <= 0.2 * 0.02);
}

TEST_CASE("realized mean degree stays near the target across profiles") {
  for (const auto& profile : builtin_profiles(20.0)) {
    CategoryProfile p = profile;
    p.n = 1000;
    p.boost.count_per_1000 = 0;
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed)
      total += density(generate(p, seed));
    const double mean = total / 20.0;
    CHECK(std::abs(mean - p.effective_density()) <= 0.2 * p.effective_density());
  }
}

TEST_CASE("planted cliques survive a sparse background") {
  CategoryProfile p{"t", 2.5, 0.005, 1.0, 1000, {5, 6, 6}};
  const Graph g = generate(p, 17);
  const auto cliques = enumerate_maximal_cliques(g);
  int big = 0;
  for (const auto& c : cliques)
    if (c.size() >= 6) ++big;
  CHECK(big >= 5);
}

TEST_CASE("degree tail of a dense profile recovers its exponent") {
  CategoryProfile ll = profile_by_name("LL", 20.0);
  ll.n = 10000;
  ll.boost.count_per_1000 = 0;
  const Graph g = generate(ll, 23);
  std::vector<long long> degrees;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) degrees.push_back(g.degree(v));
  const auto fit = fit_power_law(degrees);
  CHECK(std::abs(fit.alpha - ll.alpha) <= 0.3);
}

TEST_CASE("infeasible targets are rejected") {
  CategoryProfile p{"t", 2.5, 0.8, 2.0, 100, {}};
  CHECK_THROWS_AS(generate(p, 1), std::runtime_error);
  CategoryProfile flat{"t", 1.0, 0.01, 1.0, 100, {}};
  CHECK_THROWS_AS(generate(flat, 1), std::invalid_argument);
}

TEST_CASE("builtin profiles carry the calibrated values") {
  const auto profiles = builtin_profiles();
  CHECK(profiles.size() == 5);

  const auto peps = profile_by_name("PEPS");
  CHECK(peps.alpha == doctest::Approx(3.107326));
  CHECK(peps.density == doctest::Approx(0.0001533));

  const auto st = profile_by_name("ST");
  CHECK(st.alpha == doctest::Approx(1.770715));
  CHECK(st.density == doctest::Approx(0.0002068));

  const auto si = profile_by_name("SI");
  CHECK(si.alpha == doctest::Approx(1.838563));
  CHECK(si.density == doctest::Approx(0.0000180));

  const auto ci = profile_by_name("CI");
  CHECK(ci.alpha == doctest::Approx(1.733839));
  CHECK(ci.density == doctest::Approx(0.0000427));

  const auto ll = profile_by_name("LL");
  CHECK(ll.alpha == doctest::Approx(2.977307));
  CHECK(ll.density == doctest::Approx(0.0006220));

  CHECK_THROWS_AS(profile_by_name("nope"), std::invalid_argument);

  SUBCASE("boost size ranges are pairwise disjoint") {
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      for (std::size_t j = i + 1; j < profiles.size(); ++j) {
        const auto& a = profiles[i].boost;
        const auto& b = profiles[j].boost;
        const bool disjoint =
            a.size_max < b.size_min || b.size_max < a.size_min;
        CHECK(disjoint);
      }
    }
  }
}
