#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "cliqster/graph.hpp"

namespace cliqster {

/// Singular values of the dense symmetric 0/1 adjacency matrix (equivalently
/// the absolute eigenvalues), non-increasing. Values below
/// 1e-9 * max(1, largest) are zeroed. Graphs above `dense_cap` vertices are
/// rejected; the decomposition is dense.
std::vector<double> svd_spectrum(const Graph& g, int dense_cap = 4096);

/// Spectrum truncated to top_k, zero-padded when shorter.
std::vector<double> svd_feature_vector(const Graph& g, int top_k,
                                       int dense_cap = 4096);

/// A named strategy mapping a graph to a fixed-length feature vector.
/// Deterministic for a fixed graph; the length contract is honored with
/// zero-padding.
class Decomposer {
 public:
  virtual ~Decomposer() = default;
  virtual std::string_view name() const = 0;
  virtual std::vector<double> features(const Graph& g, int top_k) const = 0;
};

/// Known strategies: "cliqster" and "svd". Unknown names are rejected;
/// the registry is the extension point for additional decompositions.
std::unique_ptr<Decomposer> make_decomposer(std::string_view name);

}  // namespace cliqster
