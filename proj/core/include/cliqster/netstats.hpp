#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cliqster/graph.hpp"

namespace cliqster {

/// Discrete power-law tail fit P(X = x) ~ x^(-alpha) for x >= x_min.
struct PowerLawFit {
  double alpha = 0.0;
  long long x_min = 1;
  std::size_t n_tail = 0;
  double ks = 0.0;  // Kolmogorov-Smirnov distance of the selected tail
};

/// Maximum-likelihood exponent via the standard continuous approximation
///   alpha = 1 + n / sum(ln(x_i / (x_min - 0.5)))
/// over the tail x_i >= x_min. Degrees must be >= 1.
///
/// When x_min is absent it is selected by minimizing the KS distance between
/// the empirical tail and the fitted model over candidate values, capped at
/// the 90th degree percentile so the tail keeps enough samples.
///
/// Errors: tail smaller than 2, or all tail degrees equal (alpha undefined).
PowerLawFit fit_power_law(std::span<const long long> degrees,
                          std::optional<long long> x_min = std::nullopt);

/// Elementary structural statistics of one graph.
struct GraphSummary {
  int n = 0;
  std::size_t m = 0;
  std::size_t components = 0;
  double density = 0.0;  // NaN when n < 2
  int max_degree = 0;
  int degeneracy = 0;
  std::size_t maximal_cliques = 0;
};

GraphSummary summarize(const Graph& g);

}  // namespace cliqster
