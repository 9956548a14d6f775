#include "cliqster/netstats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cliqster/clique.hpp"

namespace cliqster {

namespace {

struct TailStats {
  // Unique degree values ascending, with suffix counts and suffix log-sums.
  std::vector<long long> values;
  std::vector<std::size_t> count_from;   // #samples >= values[i]
  std::vector<double> logsum_from;       // sum of ln(x) over samples >= values[i]
};

TailStats tail_stats(std::vector<long long> sorted) {
  TailStats ts;
  std::size_t i = sorted.size();
  std::size_t count = 0;
  double logsum = 0.0;
  std::vector<long long> rev_vals;
  std::vector<std::size_t> rev_counts;
  std::vector<double> rev_logs;
  while (i > 0) {
    const long long v = sorted[i - 1];
    while (i > 0 && sorted[i - 1] == v) {
      ++count;
      logsum += std::log(static_cast<double>(sorted[i - 1]));
      --i;
    }
    rev_vals.push_back(v);
    rev_counts.push_back(count);
    rev_logs.push_back(logsum);
  }
  ts.values.assign(rev_vals.rbegin(), rev_vals.rend());
  ts.count_from.assign(rev_counts.rbegin(), rev_counts.rend());
  ts.logsum_from.assign(rev_logs.rbegin(), rev_logs.rend());
  return ts;
}

double mle_alpha(const TailStats& ts, std::size_t from, long long x_min) {
  const auto n = static_cast<double>(ts.count_from[from]);
  const double denom =
      ts.logsum_from[from] - n * std::log(static_cast<double>(x_min) - 0.5);
  return 1.0 + n / denom;
}

double ks_distance(const TailStats& ts, std::size_t from, long long x_min,
                   double alpha) {
  const auto n = static_cast<double>(ts.count_from[from]);
  double worst = 0.0;
  for (std::size_t i = from; i < ts.values.size(); ++i) {
    const double emp = static_cast<double>(ts.count_from[i]) / n;
    const double model =
        std::pow((static_cast<double>(ts.values[i]) - 0.5) /
                     (static_cast<double>(x_min) - 0.5),
                 1.0 - alpha);
    worst = std::max(worst, std::abs(emp - model));
  }
  return worst;
}

}  // namespace

PowerLawFit fit_power_law(std::span<const long long> degrees,
                          std::optional<long long> x_min) {
  if (degrees.size() < 2)
    throw std::invalid_argument("power-law fit needs at least two samples");
  std::vector<long long> sorted(degrees.begin(), degrees.end());
  for (long long d : sorted)
    if (d < 1) throw std::invalid_argument("degrees must be >= 1");
  std::sort(sorted.begin(), sorted.end());

  const auto ts = tail_stats(sorted);

  const auto fit_at = [&](std::size_t from) {
    PowerLawFit fit;
    fit.x_min = ts.values[from];
    fit.n_tail = ts.count_from[from];
    fit.alpha = mle_alpha(ts, from, fit.x_min);
    fit.ks = ks_distance(ts, from, fit.x_min, fit.alpha);
    return fit;
  };

  if (x_min) {
    // First unique value >= the requested cutoff; alpha uses the requested
    // x_min itself.
    const auto it = std::lower_bound(ts.values.begin(), ts.values.end(), *x_min);
    if (it == ts.values.end())
      throw std::runtime_error("no samples at or above x_min");
    const auto from = static_cast<std::size_t>(it - ts.values.begin());
    if (ts.count_from[from] < 2)
      throw std::runtime_error("fewer than two samples at or above x_min");
    if (from + 1 == ts.values.size())
      throw std::runtime_error("all tail degrees equal; exponent undefined");
    PowerLawFit fit;
    fit.x_min = *x_min;
    fit.n_tail = ts.count_from[from];
    const auto n = static_cast<double>(fit.n_tail);
    const double denom =
        ts.logsum_from[from] - n * std::log(static_cast<double>(*x_min) - 0.5);
    fit.alpha = 1.0 + n / denom;
    fit.ks = ks_distance(ts, from, fit.x_min, fit.alpha);
    return fit;
  }

  // KS-selected x_min over unique degree values, capped at the 90th degree
  // percentile so the selected tail keeps enough samples.
  const long long p90 =
      sorted[static_cast<std::size_t>(0.9 * static_cast<double>(sorted.size() - 1))];
  PowerLawFit best;
  double best_ks = std::numeric_limits<double>::infinity();
  bool found = false;
  for (std::size_t from = 0; from < ts.values.size(); ++from) {
    if (ts.values[from] > p90) break;
    if (ts.count_from[from] < 2) break;
    if (from + 1 == ts.values.size()) break;  // single distinct value left
    const auto fit = fit_at(from);
    if (fit.ks < best_ks) {
      best_ks = fit.ks;
      best = fit;
      found = true;
    }
  }
  if (!found)
    throw std::runtime_error("no admissible x_min candidate; degree tail is degenerate");
  return best;
}

GraphSummary summarize(const Graph& g) {
  GraphSummary s;
  s.n = g.vertex_count();
  s.m = g.edge_count();
  s.components = connected_components(g).size();
  s.density = s.n >= 2 ? density(g) : std::numeric_limits<double>::quiet_NaN();
  s.max_degree = g.max_degree();
  s.degeneracy = degeneracy_ordering(g).degeneracy;
  s.maximal_cliques = enumerate_maximal_cliques(g).size();
  return s;
}

}  // namespace cliqster
