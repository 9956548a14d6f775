#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "cliqster/clique.hpp"
#include "cliqster/graph.hpp"

namespace cliqster {

/// Ordered maximal-clique basis of a graph.
///
/// Each clique of size s is the support of a lower-triangular 0/1 basis
/// matrix with C(s,2) ones; the basis is kept sparse as the list of cliques
/// plus, for every graph edge, the ascending list of basis indices whose
/// clique contains both endpoints. Pairs inside a clique are always edges,
/// so edges are the only pairs with nonzero support.
struct CliqueBasis {
  int n = 0;
  std::vector<Clique> cliques;                    // canonical order
  std::vector<std::pair<int, int>> edges;         // (u, v) with u < v, sorted
  std::vector<std::vector<int>> edge_membership;  // per edge, ascending indices

  std::size_t basis_count() const { return cliques.size(); }
};

/// Normal-equation system of the unconstrained least-squares fit.
/// A(i,j) counts the edges shared by cliques i and j, so the diagonal equals
/// d and A is positive semidefinite. Kept sparse: distinct cliques overlap
/// on few edges.
struct GramSystem {
  Eigen::SparseMatrix<double> a;
  Eigen::VectorXd d;

  double coeff(int i, int j) const { return a.coeff(i, j); }
};

/// Solved basis coefficients. `ridge` is the regularization actually used
/// (zero when the plain factorization succeeded).
struct CoefficientVector {
  Eigen::VectorXd mu;
  double ridge = 0.0;
};

/// Sparse pairwise edge-probability map: (u, v) -> z for u < v, defined only
/// on pairs covered by at least one clique; implicitly zero elsewhere.
/// Stored values are the exact least-squares reconstruction and may leave
/// [0, 1]; clamping happens only when sampling.
struct GeneratorMatrix {
  int n = 0;
  std::vector<std::tuple<int, int, double>> entries;  // sorted by (u, v)
};

/// Enumerates maximal cliques and builds the edge-membership index in one
/// pass over the cliques. Requires at least one edge.
CliqueBasis build_basis(const Graph& g);

/// Accumulates A and d edge by edge: an edge whose membership list is L adds
/// one to A(i,j) for every i,j in L and one to d(k) for every k in L.
GramSystem assemble_system(const CliqueBasis& basis);

/// Solves (A + ridge*I) mu = d with a sparse symmetric factorization.
/// ridge is zero when A is numerically nonsingular, otherwise
/// 1e-9 * trace(A)/K. The solution must satisfy
/// ||(A + ridge*I) mu - d||_inf <= 1e-8 * max(1, ||d||_inf) or the solve
/// fails.
CoefficientVector solve_coefficients(const GramSystem& sys);

/// Max-norm residual of the (possibly ridged) normal equations.
double normal_equation_residual(const GramSystem& sys,
                                const CoefficientVector& coeffs);

/// Z(u,v) = sum of mu_k over the cliques containing the pair.
GeneratorMatrix reconstruct_z(const CliqueBasis& basis,
                              const CoefficientVector& coeffs);

/// Draws a graph: every covered pair becomes an edge independently with
/// probability clamp(z, 0, 1). Uncovered pairs never become edges.
Graph sample_network(const GeneratorMatrix& z, std::uint64_t seed);

/// Coefficients sorted by descending value (ties: larger clique first, then
/// lexicographic clique order), truncated to top_k and zero-padded.
std::vector<double> feature_vector(const CliqueBasis& basis,
                                   const CoefficientVector& coeffs, int top_k);

/// Full pipeline: basis, Gram system, coefficients.
struct Decomposition {
  CliqueBasis basis;
  GramSystem system;
  CoefficientVector coeffs;
};

Decomposition decompose(const Graph& g);

}  // namespace cliqster
