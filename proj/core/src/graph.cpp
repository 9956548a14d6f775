#include "cliqster/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cliqster/rng.hpp"

namespace cliqster {

namespace {

std::uint64_t pair_key(int u, int v) {
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges,
                        std::vector<std::string> tokens) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loop in edge list");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);

  if (tokens.empty()) {
    tokens.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) tokens.push_back(std::to_string(v));
  } else if (static_cast<int>(tokens.size()) != n) {
    throw std::invalid_argument("token count does not match vertex count");
  }
  g.tokens_ = std::move(tokens);

  // CSR adjacency with sorted neighbor ranges.
  std::vector<std::size_t> deg(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : g.edges_) {
    ++deg[static_cast<std::size_t>(u) + 1];
    ++deg[static_cast<std::size_t>(v) + 1];
  }
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 1; i < g.offsets_.size(); ++i)
    g.offsets_[i] = g.offsets_[i - 1] + deg[i];
  g.adj_.resize(g.offsets_.back());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : g.edges_) {
    g.adj_[cursor[static_cast<std::size_t>(u)]++] = v;
    g.adj_[cursor[static_cast<std::size_t>(v)]++] = u;
  }
  for (int v = 0; v < n; ++v) {
    auto begin = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[static_cast<std::size_t>(v)]);
    auto end = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[static_cast<std::size_t>(v) + 1]);
    std::sort(begin, end);
  }
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph from_edge_list_text(std::string_view text,
                          std::optional<int> vertex_count) {
  std::unordered_map<std::string, int> intern;
  std::vector<std::string> tokens;
  std::vector<std::pair<int, int>> edges;
  std::unordered_set<std::uint64_t> seen;

  const auto intern_token = [&](std::string_view tok) {
    auto it = intern.find(std::string(tok));
    if (it != intern.end()) return it->second;
    const int id = static_cast<int>(tokens.size());
    tokens.emplace_back(tok);
    intern.emplace(tokens.back(), id);
    return id;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto line = text.substr(pos, nl == std::string_view::npos
                                           ? std::string_view::npos
                                           : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      toks.push_back(line.substr(i, j - i));
      i = j;
    }
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() != 2)
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected two vertex tokens");
    if (toks[0] == toks[1])
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": self-loop '" + std::string(toks[0]) + "'");
    int u = intern_token(toks[0]);
    int v = intern_token(toks[1]);
    if (u > v) std::swap(u, v);
    if (seen.insert(pair_key(u, v)).second) edges.emplace_back(u, v);
  }

  int n = static_cast<int>(tokens.size());
  if (vertex_count) {
    if (*vertex_count < n)
      throw std::runtime_error("vertex count " + std::to_string(*vertex_count) +
                               " is below the " + std::to_string(n) +
                               " tokens present");
    // Pad with decimal labels that do not collide with existing tokens.
    long long candidate = 0;
    while (n < *vertex_count) {
      std::string tok = std::to_string(candidate++);
      if (intern.contains(tok)) continue;
      intern_token(tok);
      ++n;
    }
  }
  return Graph::from_edges(n, std::move(edges), std::move(tokens));
}

std::string to_edge_list_text(const Graph& g) {
  std::string out = "# vertices " + std::to_string(g.vertex_count()) +
                    " edges " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += g.token(u);
    out += ' ';
    out += g.token(v);
    out += '\n';
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int v : keep)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced vertex out of range");

  std::vector<int> remap(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<std::string> tokens;
  tokens.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    remap[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    tokens.push_back(g.token(keep[i]));
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    const int nu = remap[static_cast<std::size_t>(u)];
    const int nv = remap[static_cast<std::size_t>(v)];
    if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
  }
  return Graph::from_edges(static_cast<int>(keep.size()), std::move(edges),
                           std::move(tokens));
}

Graph sample_induced(const Graph& g, int size, std::uint64_t seed) {
  if (size < 0 || size > g.vertex_count())
    throw std::invalid_argument("sample size exceeds vertex count");
  constexpr int kRetryBudget = 25;
  Rng rng(seed);
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    auto verts = rng.sample_without_replacement(g.vertex_count(), size);
    Graph sg = induced_subgraph(g, verts);
    if (sg.edge_count() > 0) return sg;
  }
  throw std::runtime_error(
      "sampled subgraph had no edges after " + std::to_string(kRetryBudget) +
      " attempts; source graph is too sparse for this sample size");
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> visited(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (visited[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    visited[static_cast<std::size_t>(s)] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      comp.push_back(v);
      for (int u : g.neighbors(v)) {
        if (!visited[static_cast<std::size_t>(u)]) {
          visited[static_cast<std::size_t>(u)] = 1;
          q.push(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

double density(const Graph& g) {
  const auto n = static_cast<double>(g.vertex_count());
  if (g.vertex_count() < 2)
    throw std::invalid_argument("density requires at least two vertices");
  return static_cast<double>(g.edge_count()) / (n * (n - 1.0) / 2.0);
}

DegeneracyResult degeneracy_ordering(const Graph& g) {
  const int n = g.vertex_count();
  DegeneracyResult res;
  res.ordering.reserve(static_cast<std::size_t>(n));
  res.position.assign(static_cast<std::size_t>(n), -1);

  // Lazy min-heap on (current degree, vertex id): stale entries are skipped,
  // so the pop order is exactly min degree with lowest-id tie-break.
  using Entry = std::pair<int, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    pq.emplace(deg[static_cast<std::size_t>(v)], v);
  }
  while (!pq.empty()) {
    const auto [d, v] = pq.top();
    pq.pop();
    if (removed[static_cast<std::size_t>(v)] || d != deg[static_cast<std::size_t>(v)])
      continue;
    removed[static_cast<std::size_t>(v)] = 1;
    res.degeneracy = std::max(res.degeneracy, d);
    res.position[static_cast<std::size_t>(v)] = static_cast<int>(res.ordering.size());
    res.ordering.push_back(v);
    for (int u : g.neighbors(v)) {
      if (!removed[static_cast<std::size_t>(u)]) {
        --deg[static_cast<std::size_t>(u)];
        pq.emplace(deg[static_cast<std::size_t>(u)], u);
      }
    }
  }
  return res;
}

}  // namespace cliqster
