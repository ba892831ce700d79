#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coxfaces {

/// Simple undirected graph with sorted adjacency lists.
struct Graph {
  std::vector<std::vector<int>> adjacency;

  Graph() = default;
  explicit Graph(std::vector<std::vector<int>> adj);
  static Graph from_edges(int vertices, const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(adjacency.size()); }
  bool adjacent(int u, int v) const;
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  ///< (u, v) with u < v
};

struct Face {
  std::string name;
  std::vector<int> vertices;  ///< ascending

  bool contains(int v) const;
};

/// A graph together with named faces (vertex subsets).
struct FaceSystem {
  std::string description;
  Graph graph;
  std::vector<std::string> labels;  ///< one per vertex, used in reports
  std::vector<Face> faces;

  /// Human-readable problems: disconnected faces, vertices on no face, bad ids.
  std::vector<std::string> validate() const;
  std::string label(int v) const;
};

/// phi_f as a total table on vertex ids.
struct NormalizationMapTable {
  int face = 0;
  std::vector<int> map;
};

enum class ViolationKind {
  kGeodesicLeavesFace,
  kAxiomFixesFace,   ///< phi(v) = v on the face
  kAxiomEdges,       ///< edges go to edges or collapse
  kAxiomPullback,    ///< an edge leaving the face is pulled back to its face endpoint
  kImageOutsideFace,
};

std::string to_string(ViolationKind kind);
std::optional<ViolationKind> violation_kind_from_string(const std::string& text);

struct Counterexample {
  ViolationKind kind = ViolationKind::kGeodesicLeavesFace;
  int face = 0;
  int from = 0;          ///< v (pair) or the first endpoint of the offending edge
  int to = 0;            ///< v' or the second endpoint
  int witness = -1;      ///< vertex off the face on a geodesic, when applicable
  std::vector<int> path; ///< replayable geodesic from -> witness -> to

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationStats {
  std::size_t faces_checked = 0;
  std::size_t pairs_checked = 0;
  std::size_t edges_checked = 0;
  std::size_t violations = 0;  ///< total found, even if fewer are itemized
  double wall_seconds = 0.0;
};

struct VerificationReport {
  std::vector<Counterexample> counterexamples;
  VerificationStats stats;

  bool pass() const { return stats.violations == 0; }
  void merge(const VerificationReport& other);
};

struct VerifyOptions {
  int jobs = 1;
  std::size_t max_counterexamples = 64;
};

inline constexpr int kUnreachable = -1;

/// Breadth-first shortest-path distances; unreachable vertices get kUnreachable.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Every geodesic between two vertices of a face stays in the face.
///
/// A pair (v, v') fails iff some u outside the face has d(v,u) + d(u,v') = d(v,v').
/// Checked per source with one BFS and a sweep over its geodesic DAG.
VerificationReport verify_in_your_face(const FaceSystem& fs, const VerifyOptions& options = {});

/// Direct pairwise form of the geodesic criterion; quadratic memory, small graphs only.
VerificationReport verify_in_your_face_pairwise(const FaceSystem& fs);

/// Checks the three normalization-map axioms for one face.
VerificationReport verify_normalization_map(const FaceSystem& fs, int face, const NormalizationMapTable& phi);

/// v0, phi(v0), phi(v1), ..., phi(vk) with consecutive repeats removed.
std::vector<int> normalize_path(const Graph& g, const std::vector<int>& path, const Face& face,
                                const NormalizationMapTable& phi);

/// Consecutive vertices adjacent (or equal when `allow_repeats`).
bool is_walk(const Graph& g, const std::vector<int>& path, bool allow_repeats);

/// Re-checks a geodesic counterexample: the path is a geodesic, its ends lie on
/// the face and the witness does not.
bool replay_counterexample(const FaceSystem& fs, const Counterexample& cx);

struct IsomorphismOptions {
  std::vector<int> colors1;  ///< optional vertex colours that must be preserved
  std::vector<int> colors2;
  int max_vertices = 1000;
};

/// Explicit isomorphism g1 -> g2, or nullopt when none exists.
///
/// Colour refinement seeded by degree and distance profile, then
/// backtracking with distance checks against already-mapped vertices.
std::optional<std::vector<int>> graphs_isomorphic(const Graph& g1, const Graph& g2,
                                                  const IsomorphismOptions& options = {});

/// Distance-matrix fingerprint: vertex count, degree histogram, diameter.
struct GraphFingerprint {
  int vertices = 0;
  std::size_t edges = 0;
  std::vector<int> degree_histogram;
  int diameter = 0;
  friend bool operator==(const GraphFingerprint&, const GraphFingerprint&) = default;
};

GraphFingerprint fingerprint(const Graph& g);

}  // namespace coxfaces
