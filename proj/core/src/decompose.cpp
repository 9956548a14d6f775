#include "cliqster/decompose.hpp"

#include <Eigen/SparseCholesky>
#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "cliqster/rng.hpp"

namespace cliqster {

namespace {

std::uint64_t pair_key(int u, int v, int n) {
  return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) +
         static_cast<std::uint64_t>(v);
}

}  // namespace

CliqueBasis build_basis(const Graph& g) {
  if (g.edge_count() == 0)
    throw std::runtime_error("cannot build a clique basis for an edgeless graph");

  CliqueBasis basis;
  basis.n = g.vertex_count();
  basis.cliques = enumerate_maximal_cliques(g);
  basis.edges.assign(g.edges().begin(), g.edges().end());
  basis.edge_membership.resize(basis.edges.size());

  std::unordered_map<std::uint64_t, int> edge_index;
  edge_index.reserve(basis.edges.size() * 2);
  for (std::size_t e = 0; e < basis.edges.size(); ++e)
    edge_index.emplace(pair_key(basis.edges[e].first, basis.edges[e].second, basis.n),
                       static_cast<int>(e));

  // One pass over the cliques; iterating in basis order keeps every
  // membership list ascending.
  for (std::size_t k = 0; k < basis.cliques.size(); ++k) {
    const auto& vs = basis.cliques[k].vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        const auto it = edge_index.find(pair_key(vs[i], vs[j], basis.n));
        if (it == edge_index.end())
          throw std::logic_error("clique pair is not an edge of the graph");
        basis.edge_membership[static_cast<std::size_t>(it->second)].push_back(
            static_cast<int>(k));
      }
    }
  }
  return basis;
}

GramSystem assemble_system(const CliqueBasis& basis) {
  const auto k_count = static_cast<int>(basis.basis_count());
  GramSystem sys;
  sys.d = Eigen::VectorXd::Zero(k_count);

  std::vector<Eigen::Triplet<double>> triplets;
  std::unordered_map<std::uint64_t, double> acc;
  for (const auto& members : basis.edge_membership) {
    for (int i : members) {
      sys.d(i) += 1.0;
      for (int j : members) {
        acc[static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(k_count) +
            static_cast<std::uint64_t>(j)] += 1.0;
      }
    }
  }
  triplets.reserve(acc.size());
  for (const auto& [key, value] : acc) {
    const auto i = static_cast<int>(key / static_cast<std::uint64_t>(k_count));
    const auto j = static_cast<int>(key % static_cast<std::uint64_t>(k_count));
    triplets.emplace_back(i, j, value);
  }
  sys.a.resize(k_count, k_count);
  sys.a.setFromTriplets(triplets.begin(), triplets.end());
  sys.a.makeCompressed();
  return sys;
}

double normal_equation_residual(const GramSystem& sys,
                                const CoefficientVector& coeffs) {
  Eigen::VectorXd r = sys.a * coeffs.mu + coeffs.ridge * coeffs.mu - sys.d;
  return r.lpNorm<Eigen::Infinity>();
}

CoefficientVector solve_coefficients(const GramSystem& sys) {
  const auto k_count = sys.d.size();
  if (k_count == 0) throw std::invalid_argument("empty Gram system");

  const double tol = 1e-8 * std::max(1.0, sys.d.lpNorm<Eigen::Infinity>());

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver;
  solver.compute(sys.a);
  if (solver.info() == Eigen::Success) {
    // A factorization can "succeed" on a rank-deficient matrix and return an
    // arbitrary member of the solution family; inspect the pivot spread to
    // decide whether the plain solve is trustworthy.
    const auto& pivots = solver.vectorD();
    const double dmax = pivots.maxCoeff();
    const double dmin = pivots.minCoeff();
    if (dmax > 0.0 && dmin > 1e-10 * dmax) {
      CoefficientVector out{solver.solve(sys.d), 0.0};
      if (solver.info() == Eigen::Success &&
          normal_equation_residual(sys, out) <= tol)
        return out;
    }
  }

  // Rank-deficient bases happen when clique edge-indicator vectors are
  // linearly dependent; a tiny ridge restores strict positive definiteness.
  double trace = 0.0;
  for (Eigen::Index k = 0; k < k_count; ++k) trace += sys.a.coeff(k, k);
  const double ridge = 1e-9 * trace / static_cast<double>(k_count);

  Eigen::SparseMatrix<double> reg = sys.a;
  Eigen::SparseMatrix<double> eye(k_count, k_count);
  eye.setIdentity();
  reg += ridge * eye;
  solver.compute(reg);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("Gram system factorization failed");
  CoefficientVector out{solver.solve(sys.d), ridge};
  if (solver.info() != Eigen::Success ||
      normal_equation_residual(sys, out) > tol)
    throw std::runtime_error("Gram system solve exceeded residual tolerance");
  return out;
}

GeneratorMatrix reconstruct_z(const CliqueBasis& basis,
                              const CoefficientVector& coeffs) {
  GeneratorMatrix z;
  z.n = basis.n;
  z.entries.reserve(basis.edges.size());
  for (std::size_t e = 0; e < basis.edges.size(); ++e) {
    double val = 0.0;
    for (int k : basis.edge_membership[e]) val += coeffs.mu(k);
    z.entries.emplace_back(basis.edges[e].first, basis.edges[e].second, val);
  }
  return z;
}

Graph sample_network(const GeneratorMatrix& z, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v, value] : z.entries) {
    const double p = std::clamp(value, 0.0, 1.0);
    if (rng.bernoulli(p)) edges.emplace_back(u, v);
  }
  return Graph::from_edges(z.n, std::move(edges));
}

std::vector<double> feature_vector(const CliqueBasis& basis,
                                   const CoefficientVector& coeffs,
                                   int top_k) {
  if (top_k < 1) throw std::invalid_argument("top_k must be positive");
  std::vector<int> idx(basis.basis_count());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  // The basis is already ordered (size descending, lexicographic), so index
  // order is exactly the documented tie-break.
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (coeffs.mu(a) != coeffs.mu(b)) return coeffs.mu(a) > coeffs.mu(b);
    return a < b;
  });
  std::vector<double> out(static_cast<std::size_t>(top_k), 0.0);
  const auto take = std::min<std::size_t>(idx.size(), static_cast<std::size_t>(top_k));
  for (std::size_t i = 0; i < take; ++i) out[i] = coeffs.mu(idx[i]);
  return out;
}

Decomposition decompose(const Graph& g) {
  Decomposition d;
  d.basis = build_basis(g);
  d.system = assemble_system(d.basis);
  d.coeffs = solve_coefficients(d.system);
  return d;
}

}  // namespace cliqster
