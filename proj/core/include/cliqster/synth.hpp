#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cliqster/graph.hpp"

namespace cliqster {

/// Planted-clique dressing: `count_per_1000` cliques per 1000 vertices with
/// sizes drawn uniformly from [size_min, size_max].
struct CliqueBoost {
  int count_per_1000 = 0;
  int size_min = 3;
  int size_max = 3;
};

/// Recipe for one synthetic network category: a Chung-Lu background with a
/// power-law expected-degree sequence, rescaled to a target edge density,
/// plus planted cliques that give the category its community signature.
///
/// `density` is the category's base edge density; `sample_scale` multiplies
/// it for desk-scale runs (the base values are far too sparse for small
/// graphs) and is flagged in generated output metadata.
struct CategoryProfile {
  std::string name;
  double alpha = 2.0;
  double density = 0.01;
  double sample_scale = 1.0;
  int n = 800;
  CliqueBoost boost;

  double effective_density() const { return density * sample_scale; }
};

/// Deterministic per (profile, seed). Expected degrees are Pareto(alpha)
/// draws capped at n-1 and rescaled so the expected edge count matches the
/// effective density; each pair (u, v) then appears independently with
/// probability min(1, q * w_u * w_v). Planted cliques go on uniformly chosen
/// vertex subsets. Errors when the density target is infeasible.
Graph generate(const CategoryProfile& profile, std::uint64_t seed);

/// The five built-in category profiles (SI, CI, LL, PEPS, ST) with alpha and
/// base density calibrated per category; clique boosts scale inversely with
/// density rank so the categories differ in clique-size spectrum.
std::vector<CategoryProfile> builtin_profiles(double sample_scale = 20.0);

/// Lookup by short name; throws on unknown names.
CategoryProfile profile_by_name(std::string_view name,
                                double sample_scale = 20.0);

}  // namespace cliqster
