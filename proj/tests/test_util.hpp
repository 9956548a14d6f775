#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "cliqster/clique.hpp"
#include "cliqster/decompose.hpp"
#include "cliqster/graph.hpp"
#include "cliqster/rng.hpp"

namespace cliqster::test {

/// The ten-vertex example graph: vertex v carries label v+1, edges are the
/// union of the cliques {1,2,3}, {4,5,7}, {5,6,7}, {8,9,10}, {3,6}, {3,9},
/// {6,10} (14 edges in all).
inline Graph figure1_graph() {
  std::vector<std::pair<int, int>> edges = {
      {0, 1}, {0, 2}, {1, 2},          // {1,2,3}
      {3, 4}, {3, 6}, {4, 6},          // {4,5,7}
      {4, 5}, {5, 6},                  // rest of {5,6,7}
      {7, 8}, {7, 9}, {8, 9},          // {8,9,10}
      {5, 9},                          // {6,10}
      {2, 8},                          // {3,9}
      {2, 5},                          // {3,6}
  };
  std::vector<std::string> tokens;
  for (int v = 0; v < 10; ++v) tokens.push_back(std::to_string(v + 1));
  return Graph::from_edges(10, std::move(edges), std::move(tokens));
}

inline Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, std::move(edges));
}

inline std::set<std::vector<int>> clique_set(const std::vector<Clique>& cs) {
  std::set<std::vector<int>> out;
  for (const auto& c : cs) out.insert(c.vertices);
  return out;
}

/// The explicit least-squares objective: sum over all vertex pairs of the
/// squared gap between the reconstructed value and the 0/1 observation.
/// Pairs outside every clique have zero support, so only edges contribute.
inline double objective_value(const CliqueBasis& basis,
                              const Eigen::VectorXd& mu) {
  double j = 0.0;
  for (std::size_t e = 0; e < basis.edges.size(); ++e) {
    double z = 0.0;
    for (int k : basis.edge_membership[e]) z += mu(k);
    j += (z - 1.0) * (z - 1.0);
  }
  return j;
}

/// Independent check of the solver: minimize the explicit objective over the
/// dense design matrix built pair by pair (one row per vertex pair, one
/// column per clique), via a rank-revealing SVD (minimum-norm solution).
inline Eigen::VectorXd dense_least_squares_mu(const Graph& g,
                                              const CliqueBasis& basis) {
  const int n = g.vertex_count();
  const auto k_count = static_cast<Eigen::Index>(basis.basis_count());
  const Eigen::Index pairs = static_cast<Eigen::Index>(n) * (n - 1) / 2;
  Eigen::MatrixXd design = Eigen::MatrixXd::Zero(pairs, k_count);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(pairs);

  Eigen::Index rowid = 0;
  for (int u = 0; u + 1 < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++rowid) {
      if (g.has_edge(u, v)) y(rowid) = 1.0;
      for (Eigen::Index k = 0; k < k_count; ++k) {
        const auto& vs = basis.cliques[static_cast<std::size_t>(k)].vertices;
        if (std::binary_search(vs.begin(), vs.end(), u) &&
            std::binary_search(vs.begin(), vs.end(), v))
          design(rowid, k) = 1.0;
      }
    }
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(design,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.solve(y);
}

/// Inverse-CDF draw from the zeta-type discrete power law P(X=x) ~ x^-alpha
/// on x >= x_min, truncated at a large cutoff.
class ZetaSampler {
 public:
  ZetaSampler(double alpha, long long x_min, long long cutoff = 1'000'000)
      : x_min_(x_min) {
    cdf_.reserve(static_cast<std::size_t>(cutoff - x_min + 1));
    double total = 0.0;
    for (long long x = x_min; x <= cutoff; ++x) {
      total += std::pow(static_cast<double>(x), -alpha);
      cdf_.push_back(total);
    }
    for (double& c : cdf_) c /= total;
    cdf_.back() = 1.0;
  }

  long long draw(Rng& rng) const {
    const double u = rng.real_pos();
    const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
    return x_min_ + static_cast<long long>(it - cdf_.begin());
  }

 private:
  long long x_min_;
  std::vector<double> cdf_;
};

/// Closed-form draw from the half-integer-discretized power law: a
/// continuous Pareto variate based at x_min - 0.5 rounded to the nearest
/// integer, so P(X=x) ~ (x-1/2)^(1-a) - (x+1/2)^(1-a) for x >= x_min.
inline long long rounded_pareto_draw(Rng& rng, double alpha, long long x_min) {
  const double y = (static_cast<double>(x_min) - 0.5) *
                   std::pow(rng.real_pos(), -1.0 / (alpha - 1.0));
  return static_cast<long long>(std::floor(y + 0.5));
}

}  // namespace cliqster::test
