#include <algorithm>
#include <map>

#include "coxfaces/errors.hpp"
#include "coxfaces/verifier.hpp"

namespace coxfaces {

namespace {

std::vector<std::vector<int>> all_distances(const Graph& g) {
  std::vector<std::vector<int>> dist(g.size());
  for (int v = 0; v < g.size(); ++v) dist[v] = bfs_distances(g, v);
  return dist;
}

// Joint colour refinement so colour ids are comparable across both graphs.
std::pair<std::vector<int>, std::vector<int>> refine(const Graph& g1, const Graph& g2,
                                                     const std::vector<std::vector<int>>& d1,
                                                     const std::vector<std::vector<int>>& d2,
                                                     const IsomorphismOptions& options) {
  const int n = g1.size();
  using Signature = std::vector<int>;
  auto seed = [&](const Graph& g, const std::vector<std::vector<int>>& d, const std::vector<int>& colours, int v) {
    Signature sig{colours.empty() ? 0 : colours[v], static_cast<int>(g.adjacency[v].size())};
    std::vector<int> profile;
    for (int x : d[v]) {
      const int k = x == kUnreachable ? 0 : x + 1;
      if (static_cast<int>(profile.size()) <= k) profile.resize(k + 1, 0);
      ++profile[k];
    }
    sig.insert(sig.end(), profile.begin(), profile.end());
    return sig;
  };
  std::vector<int> c1(n), c2(n);
  {
    std::map<Signature, int> ids;
    std::vector<Signature> s1(n), s2(n);
    for (int v = 0; v < n; ++v) {
      s1[v] = seed(g1, d1, options.colors1, v);
      s2[v] = seed(g2, d2, options.colors2, v);
      ids.emplace(s1[v], 0);
      ids.emplace(s2[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) {
      c1[v] = ids[s1[v]];
      c2[v] = ids[s2[v]];
    }
  }
  int classes = -1;
  for (;;) {
    std::map<Signature, int> ids;
    std::vector<Signature> s1(n), s2(n);
    auto build = [](const Graph& g, const std::vector<int>& c, int v) {
      Signature sig{c[v]};
      std::vector<int> around;
      for (int u : g.adjacency[v]) around.push_back(c[u]);
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
      return sig;
    };
    for (int v = 0; v < n; ++v) {
      s1[v] = build(g1, c1, v);
      s2[v] = build(g2, c2, v);
      ids.emplace(s1[v], 0);
      ids.emplace(s2[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) {
      c1[v] = ids[s1[v]];
      c2[v] = ids[s2[v]];
    }
    if (next == classes) break;
    classes = next;
  }
  return {c1, c2};
}

}  // namespace

std::optional<std::vector<int>> graphs_isomorphic(const Graph& g1, const Graph& g2, const IsomorphismOptions& options) {
  const int n = g1.size();
  if (n > options.max_vertices || g2.size() > options.max_vertices)
    throw CapExceeded("graphs_isomorphic: more than " + std::to_string(options.max_vertices) + " vertices");
  if (!options.colors1.empty() && static_cast<int>(options.colors1.size()) != n)
    throw ContractViolation("colour list size differs from vertex count");
  if (!options.colors2.empty() && static_cast<int>(options.colors2.size()) != g2.size())
    throw ContractViolation("colour list size differs from vertex count");
  if (options.colors1.empty() != options.colors2.empty())
    throw ContractViolation("colours must be given for both graphs or neither");
  if (n != g2.size() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (n == 0) return std::vector<int>{};

  const auto d1 = all_distances(g1);
  const auto d2 = all_distances(g2);
  auto [c1, c2] = refine(g1, g2, d1, d2, options);
  {
    std::vector<int> h1 = c1, h2 = c2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return std::nullopt;
  }

  // Visit g1 in BFS order starting from a vertex in the rarest colour class.
  std::map<int, int> class_size;
  for (int v = 0; v < n; ++v) ++class_size[c1[v]];
  std::vector<int> order;
  std::vector<bool> queued(n, false);
  while (static_cast<int>(order.size()) < n) {
    int root = -1;
    for (int v = 0; v < n; ++v)
      if (!queued[v] && (root < 0 || class_size[c1[v]] < class_size[c1[root]])) root = v;
    queued[root] = true;
    const std::size_t first = order.size();
    order.push_back(root);
    for (std::size_t head = first; head < order.size(); ++head)
      for (int u : g1.adjacency[order[head]])
        if (!queued[u]) {
          queued[u] = true;
          order.push_back(u);
        }
  }
  // Earlier-visited neighbour of each vertex in `order`, used to restrict candidates.
  std::vector<int> rank_in_order(n);
  for (int k = 0; k < n; ++k) rank_in_order[order[k]] = k;
  std::vector<int> anchor(n, -1);
  for (int k = 0; k < n; ++k)
    for (int u : g1.adjacency[order[k]])
      if (rank_in_order[u] < k && (anchor[k] < 0 || rank_in_order[u] < rank_in_order[anchor[k]])) anchor[k] = u;

  std::vector<int> forward(n, -1), backward(n, -1);
  std::vector<std::vector<int>> candidates(n);
  std::vector<std::size_t> cursor(n, 0);
  constexpr int kDistanceChecks = 12;

  auto consistent = [&](int k, int b) {
    const int a = order[k];
    if (backward[b] >= 0 || c1[a] != c2[b]) return false;
    // Distances to every mapped vertex would be exact but quadratic; a prefix
    // of the order plus all mapped neighbours is enough to prune.
    for (int j = 0; j < std::min(k, kDistanceChecks); ++j)
      if (d1[a][order[j]] != d2[b][forward[order[j]]]) return false;
    int mapped_neighbours = 0;
    for (int u : g1.adjacency[a])
      if (forward[u] >= 0) {
        if (!g2.adjacent(b, forward[u])) return false;
        ++mapped_neighbours;
      }
    int mapped_images = 0;
    for (int x : g2.adjacency[b])
      if (backward[x] >= 0) ++mapped_images;
    return mapped_neighbours == mapped_images;
  };
  auto fill = [&](int k) {
    candidates[k].clear();
    cursor[k] = 0;
    if (anchor[k] >= 0) {
      candidates[k] = g2.adjacency[forward[anchor[k]]];
    } else {
      for (int b = 0; b < n; ++b) candidates[k].push_back(b);
    }
  };

  int k = 0;
  fill(0);
  while (k >= 0) {
    if (k == n) break;
    bool placed = false;
    while (cursor[k] < candidates[k].size()) {
      const int b = candidates[k][cursor[k]++];
      if (consistent(k, b)) {
        forward[order[k]] = b;
        backward[b] = order[k];
        placed = true;
        break;
      }
    }
    if (placed) {
      ++k;
      if (k < n) fill(k);
      continue;
    }
    --k;
    if (k >= 0) {
      backward[forward[order[k]]] = -1;
      forward[order[k]] = -1;
    }
  }
  if (k < 0) return std::nullopt;
  for (auto [u, v] : g1.edges())
    if (!g2.adjacent(forward[u], forward[v])) throw InternalInvariant("isomorphism search produced a non-edge");
  return forward;
}

GraphFingerprint fingerprint(const Graph& g) {
  GraphFingerprint fp;
  fp.vertices = g.size();
  fp.edges = g.edge_count();
  for (int v = 0; v < g.size(); ++v) {
    const int deg = static_cast<int>(g.adjacency[v].size());
    if (static_cast<int>(fp.degree_histogram.size()) <= deg) fp.degree_histogram.resize(deg + 1, 0);
    ++fp.degree_histogram[deg];
    for (int d : bfs_distances(g, v)) fp.diameter = std::max(fp.diameter, d);
  }
  return fp;
}

}  // namespace coxfaces
