#pragma once

#include <vector>

#include "cliqster/graph.hpp"

namespace cliqster {

/// A maximal clique, vertices sorted ascending.
struct Clique {
  std::vector<int> vertices;

  int size() const { return static_cast<int>(vertices.size()); }

  friend bool operator==(const Clique& a, const Clique& b) {
    return a.vertices == b.vertices;
  }
};

/// Canonical output order: size descending, then lexicographic vertex order.
bool clique_order_less(const Clique& a, const Clique& b);

/// All maximal cliques of size >= 2, each exactly once, in canonical order.
///
/// Bron-Kerbosch with the outer loop over the degeneracy ordering and
/// pivoting on the vertex of P∪X with the most neighbors in P (lowest id on
/// ties). Isolated vertices contribute no basis support and are skipped.
std::vector<Clique> enumerate_maximal_cliques(const Graph& g);

/// Exhaustive reference enumeration over all 2^n vertex subsets.
/// Same output contract as enumerate_maximal_cliques. Requires n <= 15.
std::vector<Clique> brute_force_maximal_cliques(const Graph& g);

}  // namespace cliqster
