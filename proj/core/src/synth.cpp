#include "cliqster/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cliqster/rng.hpp"

namespace cliqster {

namespace {

// Expected edge count of the clamped product model p_uv = min(1, q w_u w_v),
// computed from weights sorted descending with a suffix-sum table.
double expected_edges(const std::vector<double>& w_sorted,
                      const std::vector<double>& suffix_sum, double q) {
  const std::size_t n = w_sorted.size();
  double total = 0.0;
  for (std::size_t u = 0; u + 1 < n; ++u) {
    // Pairs with q*w_u*w_v >= 1 saturate at probability one. w is sorted
    // descending, so they form a prefix of the v > u range.
    const double threshold = 1.0 / (q * w_sorted[u]);
    const auto split = static_cast<std::size_t>(
        std::lower_bound(w_sorted.begin() + static_cast<std::ptrdiff_t>(u) + 1,
                         w_sorted.end(), threshold,
                         [](double a, double b) { return a > b; }) -
        w_sorted.begin());
    total += static_cast<double>(split - u - 1);
    total += q * w_sorted[u] * (suffix_sum[split]);
  }
  return total;
}

}  // namespace

Graph generate(const CategoryProfile& profile, std::uint64_t seed) {
  const int n = profile.n;
  if (n < 2) throw std::invalid_argument("profile needs at least two vertices");
  if (!(profile.alpha > 1.0))
    throw std::invalid_argument("profile alpha must exceed 1");
  const double eff = profile.effective_density();
  if (!(eff > 0.0))
    throw std::invalid_argument("profile density must be positive");
  if (eff > 1.0)
    throw std::runtime_error(
        "infeasible density: expected degree would exceed n-1");
  if (profile.boost.count_per_1000 > 0 &&
      (profile.boost.size_min < 3 || profile.boost.size_max < profile.boost.size_min))
    throw std::invalid_argument("planted clique sizes must be >= 3 and ordered");

  Rng rng(seed);

  // Pareto(alpha) expected degrees, capped at n-1.
  std::vector<double> w(static_cast<std::size_t>(n));
  const double inv = -1.0 / (profile.alpha - 1.0);
  for (double& wi : w)
    wi = std::min(std::pow(rng.real_pos(), inv), static_cast<double>(n - 1));

  const double target_m = eff * static_cast<double>(n) *
                          static_cast<double>(n - 1) / 2.0;

  std::vector<double> w_sorted = w;
  std::sort(w_sorted.begin(), w_sorted.end(), std::greater<>());
  std::vector<double> suffix(static_cast<std::size_t>(n) + 1, 0.0);
  for (std::size_t i = static_cast<std::size_t>(n); i > 0; --i)
    suffix[i - 1] = suffix[i] + w_sorted[i - 1];

  // Bisection on q so the clamped expectation hits the target edge count.
  double lo = 0.0;
  double hi = 1.0 / (w_sorted[0] * w_sorted[0]);
  while (expected_edges(w_sorted, suffix, hi) < target_m) {
    hi *= 2.0;
    if (hi > 1e30)
      throw std::runtime_error("edge-count calibration failed to bracket");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (expected_edges(w_sorted, suffix, mid) < target_m) lo = mid;
    else hi = mid;
  }
  const double q = 0.5 * (lo + hi);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(target_m * 1.2) + 16);
  for (int u = 0; u + 1 < n; ++u) {
    const double wu = w[static_cast<std::size_t>(u)];
    for (int v = u + 1; v < n; ++v) {
      const double p = std::min(1.0, q * wu * w[static_cast<std::size_t>(v)]);
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }

  // Planted cliques on uniformly chosen vertex subsets.
  const auto planted = static_cast<int>(
      std::llround(static_cast<double>(profile.boost.count_per_1000) *
                   static_cast<double>(n) / 1000.0));
  for (int c = 0; c < planted; ++c) {
    const int span = profile.boost.size_max - profile.boost.size_min + 1;
    int size = profile.boost.size_min +
               static_cast<int>(rng.below(static_cast<std::uint64_t>(span)));
    size = std::min(size, n);
    const auto verts = rng.sample_without_replacement(n, size);
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        edges.emplace_back(verts[i], verts[j]);
  }

  return Graph::from_edges(n, std::move(edges));
}

std::vector<CategoryProfile> builtin_profiles(double sample_scale) {
  // Alpha and base density are per-category calibration values; the clique
  // boosts scale inversely with density rank, with pairwise-disjoint size
  // ranges, so the categories differ in clique-size spectrum.
  std::vector<CategoryProfile> out;
  out.push_back({"SI", 1.838563, 0.0000180, sample_scale, 400, {80, 13, 14}});
  out.push_back({"CI", 1.733839, 0.0000427, sample_scale, 400, {64, 11, 12}});
  out.push_back({"PEPS", 3.107326, 0.0001533, sample_scale, 400, {24, 8, 9}});
  out.push_back({"ST", 1.770715, 0.0002068, sample_scale, 400, {16, 5, 6}});
  out.push_back({"LL", 2.977307, 0.0006220, sample_scale, 400, {8, 3, 4}});
  return out;
}

CategoryProfile profile_by_name(std::string_view name, double sample_scale) {
  for (auto& p : builtin_profiles(sample_scale))
    if (p.name == name) return p;
  throw std::invalid_argument("unknown profile '" + std::string(name) +
                              "'; known: SI, CI, LL, PEPS, ST");
}

}  // namespace cliqster
