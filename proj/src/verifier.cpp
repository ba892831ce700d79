#include "coxfaces/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <mutex>
#include <thread>
#include <tuple>

#include "coxfaces/errors.hpp"

namespace coxfaces {

namespace {

auto ordering_key(const Counterexample& cx) { return std::tie(cx.face, cx.kind, cx.from, cx.to, cx.witness); }

void sort_counterexamples(std::vector<Counterexample>& list, std::size_t limit) {
  std::sort(list.begin(), list.end(),
            [](const Counterexample& a, const Counterexample& b) { return ordering_key(a) < ordering_key(b); });
  if (list.size() > limit) list.resize(limit);
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.size()) throw ContractViolation("vertex " + std::to_string(v) + " is not in the graph");
}

// Runs body(task) for task in [0, count) on up to `jobs` threads.
template <class Body>
void parallel_for(int count, int jobs, Body body) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int t = 0; t < count; ++t) body(t, 0);
    return;
  }
  std::vector<std::thread> workers;
  std::mutex mutex;
  int next = 0;
  for (int worker = 0; worker < jobs; ++worker) {
    workers.emplace_back([&, worker] {
      for (;;) {
        int task;
        {
          std::lock_guard<std::mutex> lock(mutex);
          if (next >= count) return;
          task = next++;
        }
        body(task, worker);
      }
    });
  }
  for (auto& w : workers) w.join();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

Graph::Graph(std::vector<std::vector<int>> adj) : adjacency(std::move(adj)) {
  const int n = size();
  for (int v = 0; v < n; ++v) {
    auto& row = adjacency[v];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    for (int u : row)
      if (u < 0 || u >= n || u == v) throw ContractViolation("adjacency list names a bad vertex");
  }
  for (int v = 0; v < n; ++v)
    for (int u : adjacency[v])
      if (!adjacent(u, v)) throw ContractViolation("adjacency lists are not symmetric");
}

Graph Graph::from_edges(int vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(vertices);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices || u == v) throw ContractViolation("bad edge");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return Graph(std::move(adj));
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || u >= size()) return false;
  return std::binary_search(adjacency[u].begin(), adjacency[u].end(), v);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adjacency) total += row.size();
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    for (int v : adjacency[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Face::contains(int v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

std::string FaceSystem::label(int v) const {
  if (v >= 0 && v < static_cast<int>(labels.size()) && !labels[v].empty()) return labels[v];
  return std::to_string(v);
}

std::vector<std::string> FaceSystem::validate() const {
  std::vector<std::string> issues;
  const int n = graph.size();
  if (!labels.empty() && static_cast<int>(labels.size()) != n) issues.push_back("label count differs from vertex count");
  std::vector<bool> covered(n, false);
  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    const Face& f = faces[fi];
    const std::string name = f.name.empty() ? "#" + std::to_string(fi) : f.name;
    if (f.vertices.empty()) {
      issues.push_back("face " + name + " is empty");
      continue;
    }
    if (!std::is_sorted(f.vertices.begin(), f.vertices.end()) ||
        std::adjacent_find(f.vertices.begin(), f.vertices.end()) != f.vertices.end()) {
      issues.push_back("face " + name + " is not a strictly ascending vertex list");
      continue;
    }
    if (f.vertices.front() < 0 || f.vertices.back() >= n) {
      issues.push_back("face " + name + " names a vertex outside the graph");
      continue;
    }
    for (int v : f.vertices) covered[v] = true;
    // Connectivity of the induced subgraph.
    std::vector<bool> seen(n, false);
    std::deque<int> queue{f.vertices.front()};
    seen[f.vertices.front()] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (int u : graph.adjacency[v])
        if (!seen[u] && f.contains(u)) {
          seen[u] = true;
          ++reached;
          queue.push_back(u);
        }
    }
    if (reached != f.vertices.size()) issues.push_back("face " + name + " does not induce a connected subgraph");
  }
  for (int v = 0; v < n; ++v)
    if (!covered[v]) issues.push_back("vertex " + label(v) + " lies on no face");
  return issues;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kGeodesicLeavesFace: return "geodesic";
    case ViolationKind::kAxiomFixesFace: return "axiom1";
    case ViolationKind::kAxiomEdges: return "axiom2";
    case ViolationKind::kAxiomPullback: return "axiom3";
    case ViolationKind::kImageOutsideFace: return "image";
  }
  return "unknown";
}

std::optional<ViolationKind> violation_kind_from_string(const std::string& text) {
  for (auto kind : {ViolationKind::kGeodesicLeavesFace, ViolationKind::kAxiomFixesFace, ViolationKind::kAxiomEdges,
                    ViolationKind::kAxiomPullback, ViolationKind::kImageOutsideFace})
    if (to_string(kind) == text) return kind;
  return std::nullopt;
}

void VerificationReport::merge(const VerificationReport& other) {
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
  sort_counterexamples(counterexamples, counterexamples.size());
  stats.faces_checked += other.stats.faces_checked;
  stats.pairs_checked += other.stats.pairs_checked;
  stats.edges_checked += other.stats.edges_checked;
  stats.violations += other.stats.violations;
  stats.wall_seconds += other.stats.wall_seconds;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  check_vertex(g, source);
  std::vector<int> dist(g.size(), kUnreachable);
  std::vector<int> queue{source};
  queue.reserve(g.size());
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int u : g.adjacency[v])
      if (dist[u] == kUnreachable) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

VerificationReport verify_in_your_face(const FaceSystem& fs, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Graph& g = fs.graph;
  const int n = g.size();
  std::vector<std::vector<int>> faces_of(n);
  for (int fi = 0; fi < static_cast<int>(fs.faces.size()); ++fi)
    for (int v : fs.faces[fi].vertices) {
      check_vertex(g, v);
      faces_of[v].push_back(fi);
    }

  struct WorkerState {
    std::vector<Counterexample> found;
    std::size_t violations = 0;
  };
  const int jobs = std::max(1, options.jobs);
  std::vector<WorkerState> states(jobs);
  const std::size_t keep = options.max_counterexamples;

  parallel_for(n, jobs, [&](int v, int worker) {
    if (faces_of[v].empty()) return;
    WorkerState& state = states[worker];
    // BFS order and distances from v.
    std::vector<int> dist(n, kUnreachable);
    std::vector<int> order{v};
    order.reserve(n);
    dist[v] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int x = order[head];
      for (int y : g.adjacency[x])
        if (dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          order.push_back(y);
        }
    }
    // witness[x]: some vertex off the face on a geodesic v -> x (or -1);
    // via[x]: the geodesic predecessor it was inherited through.
    std::vector<int> witness(n), via(n);
    for (int fi : faces_of[v]) {
      const Face& f = fs.faces[fi];
      for (int x : order) {
        witness[x] = -1;
        via[x] = -1;
        if (x == v) continue;
        if (!f.contains(x)) {
          witness[x] = x;
          continue;
        }
        for (int y : g.adjacency[x])
          if (dist[y] == dist[x] - 1 && witness[y] >= 0) {
            witness[x] = witness[y];
            via[x] = y;
            break;
          }
      }
      for (int target : f.vertices) {
        if (target <= v || dist[target] == kUnreachable || witness[target] < 0) continue;
        ++state.violations;
        Counterexample cx;
        cx.kind = ViolationKind::kGeodesicLeavesFace;
        cx.face = fi;
        cx.from = v;
        cx.to = target;
        cx.witness = witness[target];
        // target back to the witness along `via`, then to v along any predecessors.
        std::vector<int> path{target};
        int x = target;
        while (x != cx.witness) {
          x = via[x];
          path.push_back(x);
        }
        while (x != v) {
          for (int y : g.adjacency[x])
            if (dist[y] == dist[x] - 1) {
              x = y;
              break;
            }
          path.push_back(x);
        }
        std::reverse(path.begin(), path.end());
        cx.path = std::move(path);
        state.found.push_back(std::move(cx));
        // Per-worker trimming keeps every globally smallest entry.
        if (state.found.size() > 4 * keep + 64) sort_counterexamples(state.found, keep);
      }
    }
  });

  VerificationReport report;
  for (auto& state : states) {
    report.stats.violations += state.violations;
    report.counterexamples.insert(report.counterexamples.end(), state.found.begin(), state.found.end());
  }
  sort_counterexamples(report.counterexamples, keep);
  report.stats.faces_checked = fs.faces.size();
  for (const Face& f : fs.faces) report.stats.pairs_checked += f.vertices.size() * (f.vertices.size() - 1) / 2;
  report.stats.wall_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_in_your_face_pairwise(const FaceSystem& fs) {
  const auto start = std::chrono::steady_clock::now();
  const Graph& g = fs.graph;
  std::vector<std::vector<int>> dist(g.size());
  for (int v = 0; v < g.size(); ++v) dist[v] = bfs_distances(g, v);
  VerificationReport report;
  for (int fi = 0; fi < static_cast<int>(fs.faces.size()); ++fi) {
    const Face& f = fs.faces[fi];
    for (std::size_t a = 0; a < f.vertices.size(); ++a)
      for (std::size_t b = a + 1; b < f.vertices.size(); ++b) {
        const int v = f.vertices[a], w = f.vertices[b];
        ++report.stats.pairs_checked;
        if (dist[v][w] == kUnreachable) continue;
        for (int u = 0; u < g.size(); ++u) {
          if (f.contains(u) || dist[v][u] == kUnreachable) continue;
          if (dist[v][u] + dist[u][w] == dist[v][w]) {
            ++report.stats.violations;
            Counterexample cx;
            cx.face = fi;
            cx.from = v;
            cx.to = w;
            cx.witness = u;
            report.counterexamples.push_back(cx);
            break;
          }
        }
      }
  }
  report.stats.faces_checked = fs.faces.size();
  report.stats.wall_seconds = seconds_since(start);
  return report;
}

VerificationReport verify_normalization_map(const FaceSystem& fs, int face, const NormalizationMapTable& phi) {
  const auto start = std::chrono::steady_clock::now();
  const Graph& g = fs.graph;
  if (face < 0 || face >= static_cast<int>(fs.faces.size())) throw ContractViolation("face index out of range");
  if (static_cast<int>(phi.map.size()) != g.size()) throw ContractViolation("normalization map is not total");
  const Face& f = fs.faces[face];
  VerificationReport report;
  auto add = [&](ViolationKind kind, int a, int b) {
    ++report.stats.violations;
    Counterexample cx;
    cx.kind = kind;
    cx.face = face;
    cx.from = a;
    cx.to = b;
    report.counterexamples.push_back(cx);
  };
  for (int v = 0; v < g.size(); ++v) {
    const int image = phi.map[v];
    if (image < 0 || image >= g.size() || !f.contains(image)) add(ViolationKind::kImageOutsideFace, v, image);
    if (f.contains(v) && image != v) add(ViolationKind::kAxiomFixesFace, v, image);
  }
  for (auto [u, v] : g.edges()) {
    ++report.stats.edges_checked;
    const int pu = phi.map[u], pv = phi.map[v];
    if (pu != pv && !g.adjacent(pu, pv)) add(ViolationKind::kAxiomEdges, u, v);
    const bool in_u = f.contains(u), in_v = f.contains(v);
    if (in_u && !in_v && pv != u) add(ViolationKind::kAxiomPullback, u, v);
    if (in_v && !in_u && pu != v) add(ViolationKind::kAxiomPullback, v, u);
  }
  sort_counterexamples(report.counterexamples, report.counterexamples.size());
  report.stats.faces_checked = 1;
  report.stats.wall_seconds = seconds_since(start);
  return report;
}

bool is_walk(const Graph& g, const std::vector<int>& path, bool allow_repeats) {
  for (int v : path)
    if (v < 0 || v >= g.size()) return false;
  for (std::size_t k = 1; k < path.size(); ++k) {
    if (path[k] == path[k - 1]) {
      if (!allow_repeats) return false;
    } else if (!g.adjacent(path[k - 1], path[k])) {
      return false;
    }
  }
  return true;
}

std::vector<int> normalize_path(const Graph& g, const std::vector<int>& path, const Face& face,
                                const NormalizationMapTable& phi) {
  if (path.empty()) throw ContractViolation("normalize_path: empty path");
  if (!is_walk(g, path, true)) throw ContractViolation("normalize_path: input is not a walk");
  if (static_cast<int>(phi.map.size()) != g.size()) throw ContractViolation("normalization map is not total");
  if (!face.contains(path.back())) throw ContractViolation("normalize_path: path does not end in the face");
  const int start = path.front();
  bool touches = face.contains(start);
  for (int u : g.adjacency[start]) touches = touches || face.contains(u);
  if (!touches) throw ContractViolation("normalize_path: start vertex is not adjacent to the face");

  std::vector<int> out{start};
  for (int v : path) {
    const int image = phi.map[v];
    if (image != out.back()) out.push_back(image);
  }
  return out;
}

bool replay_counterexample(const FaceSystem& fs, const Counterexample& cx) {
  const Graph& g = fs.graph;
  if (cx.kind != ViolationKind::kGeodesicLeavesFace) return false;
  if (cx.face < 0 || cx.face >= static_cast<int>(fs.faces.size())) return false;
  const Face& f = fs.faces[cx.face];
  if (cx.path.size() < 2 || cx.path.front() != cx.from || cx.path.back() != cx.to) return false;
  if (!is_walk(g, cx.path, false)) return false;
  if (!f.contains(cx.from) || !f.contains(cx.to)) return false;
  if (cx.witness < 0 || cx.witness >= g.size() || f.contains(cx.witness)) return false;
  if (std::find(cx.path.begin(), cx.path.end(), cx.witness) == cx.path.end()) return false;
  const std::vector<int> dist = bfs_distances(g, cx.from);
  return dist[cx.to] == static_cast<int>(cx.path.size()) - 1;
}

}  // namespace coxfaces
