#include "cliqster/clique.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace cliqster {

bool clique_order_less(const Clique& a, const Clique& b) {
  if (a.vertices.size() != b.vertices.size())
    return a.vertices.size() > b.vertices.size();
  return a.vertices < b.vertices;
}

namespace {

std::vector<int> intersect_sorted(std::span<const int> a,
                                  std::span<const int> b) {
  std::vector<int> out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::size_t intersection_size(std::span<const int> a, std::span<const int> b) {
  std::size_t cnt = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else { ++cnt; ++i; ++j; }
  }
  return cnt;
}

struct BronKerbosch {
  const Graph& g;
  std::vector<Clique>& out;
  std::vector<int> r;

  void expand(std::vector<int> p, std::vector<int> x) {
    if (p.empty() && x.empty()) {
      if (r.size() >= 2) {
        Clique c{r};
        std::sort(c.vertices.begin(), c.vertices.end());
        out.push_back(std::move(c));
      }
      return;
    }
    if (p.empty()) return;

    // Pivot on the vertex of P∪X with the most neighbors in P; scanning the
    // merged ascending sequence with a strict improvement keeps the lowest
    // id among ties.
    int pivot = -1;
    std::size_t best = 0;
    bool first = true;
    {
      auto i = p.begin();
      auto j = x.begin();
      while (i != p.end() || j != x.end()) {
        int u;
        if (j == x.end() || (i != p.end() && *i < *j)) u = *i++;
        else u = *j++;
        const std::size_t c = intersection_size(g.neighbors(u), p);
        if (first || c > best) {
          first = false;
          best = c;
          pivot = u;
        }
      }
    }

    std::vector<int> candidates;
    {
      auto nb = g.neighbors(pivot);
      std::set_difference(p.begin(), p.end(), nb.begin(), nb.end(),
                          std::back_inserter(candidates));
    }
    for (int v : candidates) {
      const auto nv = g.neighbors(v);
      r.push_back(v);
      expand(intersect_sorted(p, nv), intersect_sorted(x, nv));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }
};

}  // namespace

std::vector<Clique> enumerate_maximal_cliques(const Graph& g) {
  std::vector<Clique> out;
  const auto order = degeneracy_ordering(g);
  for (std::size_t i = 0; i < order.ordering.size(); ++i) {
    const int v = order.ordering[i];
    std::vector<int> p, x;
    for (int u : g.neighbors(v)) {
      if (order.position[static_cast<std::size_t>(u)] > static_cast<int>(i))
        p.push_back(u);
      else
        x.push_back(u);
    }
    std::sort(p.begin(), p.end());
    std::sort(x.begin(), x.end());
    BronKerbosch bk{g, out, {v}};
    bk.expand(std::move(p), std::move(x));
  }
  std::sort(out.begin(), out.end(), clique_order_less);
  return out;
}

std::vector<Clique> brute_force_maximal_cliques(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 15)
    throw std::invalid_argument("brute-force enumeration is limited to 15 vertices");

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= 1u << v;
    adj[static_cast<std::size_t>(v)] |= 1u << u;
  }

  std::vector<Clique> out;
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    if (std::popcount(mask) < 2) continue;
    bool is_clique = true;
    for (std::uint32_t rest = mask; rest && is_clique;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if ((mask ^ (1u << v)) & ~adj[static_cast<std::size_t>(v)]) is_clique = false;
    }
    if (!is_clique) continue;
    bool maximal = true;
    for (std::uint32_t outside = all & ~mask; outside && maximal;) {
      const int w = std::countr_zero(outside);
      outside &= outside - 1;
      if ((adj[static_cast<std::size_t>(w)] & mask) == mask) maximal = false;
    }
    if (!maximal) continue;
    Clique c;
    for (std::uint32_t rest = mask; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      c.vertices.push_back(v);
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), clique_order_less);
  return out;
}

}  // namespace cliqster
