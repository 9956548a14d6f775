#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliqster {

/// Immutable undirected simple graph with contiguous vertex ids.
///
/// Edges are stored once as (u, v) with u < v, sorted lexicographically,
/// alongside per-vertex sorted neighbor lists. Vertices keep the original
/// string tokens they were loaded with so graphs can be echoed back in the
/// same edge-list format. Instances are safe to share across threads after
/// construction.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an explicit edge list. Edges are normalized to
  /// (min, max) order, sorted and deduplicated. Self-loops and out-of-range
  /// endpoints are rejected. When `tokens` is empty, decimal labels are used.
  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges,
                          std::vector<std::string> tokens = {});

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const std::pair<int, int>> edges() const { return edges_; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offsets_[static_cast<std::size_t>(v)],
            adj_.data() + offsets_[static_cast<std::size_t>(v) + 1]};
  }

  int degree(int v) const {
    return static_cast<int>(offsets_[static_cast<std::size_t>(v) + 1] -
                            offsets_[static_cast<std::size_t>(v)]);
  }

  int max_degree() const;

  bool has_edge(int u, int v) const;

  const std::string& token(int v) const {
    return tokens_[static_cast<std::size_t>(v)];
  }
  std::span<const std::string> tokens() const { return tokens_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<int> adj_;
  std::vector<std::string> tokens_;
};

/// Result of the minimum-degree elimination ordering.
/// Every vertex has at most `degeneracy` neighbors later in `ordering`.
struct DegeneracyResult {
  std::vector<int> ordering;  // removal order
  std::vector<int> position;  // position[v] = index of v in ordering
  int degeneracy = 0;
};

/// Parses an edge-list document: one edge per line as two whitespace
/// separated tokens, '#'-prefixed comment lines and blank lines skipped.
/// Tokens are interned to contiguous ids in first-appearance order;
/// duplicate and reversed-duplicate edges collapse to one. Self-loops and
/// malformed lines are rejected with their line number.
///
/// `vertex_count`, when given, pads the graph with isolated vertices up to
/// that count (edge lists carry no isolated-vertex information on their own).
Graph from_edge_list_text(std::string_view text,
                          std::optional<int> vertex_count = std::nullopt);

/// Serializes a graph in the same edge-list format, original tokens intact.
std::string to_edge_list_text(const Graph& g);

/// Subgraph induced by `vertices` (which must be in range). Selected
/// vertices are relabeled contiguously preserving their relative order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Uniform induced subgraph of `size` vertices, deterministic per seed.
/// Samples that contain no edges are redrawn up to a bounded retry budget;
/// exhausting it signals an overly sparse source graph.
Graph sample_induced(const Graph& g, int size, std::uint64_t seed);

/// Partition of the vertex set into connected components. Components are
/// ordered by smallest member, members ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// m / (n(n-1)/2). Requires n >= 2.
double density(const Graph& g);

/// Repeatedly removes a minimum-degree vertex (lowest id on ties) and
/// records the largest degree seen at removal time.
DegeneracyResult degeneracy_ordering(const Graph& g);

}  // namespace cliqster
