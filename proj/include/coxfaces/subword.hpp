#pragma once

#include <map>
#include <utility>
#include <vector>

#include "coxfaces/coxeter.hpp"
#include "coxfaces/sortable.hpp"

namespace coxfaces {

// Positions in Q are 0-based in this API; serialized forms are 1-based.

/// The word Q = c w_o(c) of length N + n.
struct QWord {
  CoxeterElementOrder c;
  std::vector<int> letters;

  int size() const { return static_cast<int>(letters.size()); }
  friend bool operator==(const QWord&, const QWord&) = default;
};

/// n positions of Q whose complement is a reduced word for w_o.
struct VertexSubword {
  std::vector<int> positions;  ///< ascending

  bool contains(int p) const;
  friend bool operator==(const VertexSubword&, const VertexSubword&) = default;
  friend bool operator<(const VertexSubword& a, const VertexSubword& b) { return a.positions < b.positions; }
};

QWord build_Q(const CoxeterSystem& sys, const CoxeterElementOrder& c);

/// True iff the complement of P multiplies to an element of length N.
bool is_vertex_subword(const CoxeterSystem& sys, const VertexSubword& p, const QWord& q);

struct FlipResult {
  VertexSubword vertex;
  int entering = 0;
};

/// Exchanges position `leaving` for the unique other position giving a vertex-subword.
FlipResult flip(const CoxeterSystem& sys, const VertexSubword& p, int leaving, const QWord& q);

/// Flip graph of the subword complex: the associahedron's 1-skeleton.
struct FlipGraph {
  QWord q;
  std::vector<VertexSubword> vertices;
  /// Sorted neighbour lists.
  std::vector<std::vector<int>> adjacency;
  /// letter_faces[p]: vertices whose subword contains position p, ascending.
  std::vector<std::vector<int>> letter_faces;
  std::map<std::vector<int>, int> index;

  int size() const { return static_cast<int>(vertices.size()); }
  int find(const VertexSubword& v) const;
  std::size_t edge_count() const;
};

/// Breadth-first flip closure from the initial copy of c, {0, ..., n-1}.
FlipGraph flip_graph(const CoxeterSystem& sys, const QWord& q);

/// All vertex-subwords containing position p.
const std::vector<int>& letter_face(int p, const FlipGraph& g);

/// Position bookkeeping for one Cambrian rotation.
struct RotationMap {
  QWord target;                    ///< canonical c' w_o(c') for c' = s^{-1} c s
  std::vector<int> position_map;   ///< old position -> position in target
};

/// Shift left by one, append w_o s w_o, then commute into canonical form.
RotationMap rotation_map(const CoxeterSystem& sys, const QWord& q);

/// Image of a single vertex-subword under Cambrian rotation.
std::pair<VertexSubword, QWord> cambrian_rotate(const CoxeterSystem& sys, const VertexSubword& p, const QWord& q);

/// Applies a rotation's position map to a vertex-subword.
VertexSubword apply_rotation(const RotationMap& rotation, const VertexSubword& p);

/// The simple reflection w_o s w_o.
int conjugate_by_longest(const CoxeterSystem& sys, int s);

}  // namespace coxfaces
