#pragma once

#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxfaces/coxeter.hpp"
#include "coxfaces/sortable.hpp"
#include "coxfaces/verifier.hpp"

namespace coxfaces::type_a {

// Permutations of {1..n} in one-line notation; s_i = (i, i+1) for 1 <= i <= n-1,
// which is simple index i-1 of the system "A{n-1}". Words multiply as
// composition of functions, rightmost letter first.

using Permutation = std::vector<int>;

/// c as the n-cycle (1, d_1, ..., d_l, n, u_k, ..., u_1).
struct CycleForm {
  int n = 0;
  std::vector<int> lowers;  ///< ascending
  std::vector<int> uppers;  ///< ascending
  std::vector<int> cycle;   ///< read from 1

  friend bool operator==(const CycleForm&, const CycleForm&) = default;
};

/// Multiplies out c (0-based simple indices) as a permutation of {1..n}.
Permutation permutation_of_word(const std::vector<int>& letters, int n);

CycleForm cycle_form(const CoxeterElementOrder& c, int n);

enum class Mark { kUpper, kLower };

/// One marked vertex per x-coordinate 1..n; 0 and n+1 are the two ends.
struct LabeledPolygon {
  int n = 0;
  std::vector<Mark> marks;  ///< marks[x] for 1 <= x <= n; marks[0] unused
  std::vector<int> boundary;  ///< counterclockwise: 0, Lower ascending, n+1, Upper descending

  Mark mark(int x) const { return marks.at(x); }
  /// Position of label x on the boundary cycle.
  int position(int x) const;
};

LabeledPolygon polygon_labeling(const CycleForm& cf, Mark choice1, Mark choice_n);

/// Unordered pair of labels, stored with first < second.
using Diagonal = std::pair<int, int>;
using Triangulation = std::set<Diagonal>;

Diagonal make_diagonal(int a, int b);
bool is_boundary_edge(const LabeledPolygon& p, Diagonal d);
bool is_interior(const LabeledPolygon& p, Diagonal d);
/// Strict interleaving in the boundary cyclic order.
bool crosses(const LabeledPolygon& p, Diagonal d, Diagonal e);
/// Interior diagonals of p.
std::vector<Diagonal> interior_diagonals(const LabeledPolygon& p);
/// n-1 pairwise noncrossing interior diagonals.
bool is_triangulation(const LabeledPolygon& p, const Triangulation& t);

/// Union of the scanned paths P_0..P_n, interior diagonals only.
Triangulation triangulation_of(const Permutation& w, const LabeledPolygon& p);
/// The paths P_0..P_n themselves, each as labels in x order.
std::vector<std::vector<int>> paths_of(const Permutation& w, const LabeledPolygon& p);

/// "linear", "bipartite" or 1-based letters, for S_n without building a root system.
CoxeterElementOrder parse_order(const std::string& text, int n);

/// The Coxeter element s_i s_{i+1} ... s_{n-1} s_1 ... s_{i-1}.
CoxeterElementOrder c_i(int n, int i);
/// Labeling for c_i with the single Upper vertex i (1 and n Lower unless equal to i).
LabeledPolygon c_i_labeling(int n, int i);

std::set<Diagonal> project_diagonal(Diagonal d, int i, const LabeledPolygon& p);
Triangulation project_triangulation(const Triangulation& t, int i, const LabeledPolygon& p);
/// The fixed-vertex projection with x in {i, i+1}.
std::set<Diagonal> stt_project(Diagonal d, int i, int x, const LabeledPolygon& p);

/// Parabolic component of w for J = S minus s_i: the values 1..i in order of
/// appearance, then i+1..n in order of appearance.
Permutation parabolic_projection(const Permutation& w, int i);

struct Relabeling {
  int i = 0;
  std::vector<int> map;  ///< map[conventional label] = new label
};

/// Relabels the conventional (n+2)-gon (0..n+1 counterclockwise) so that f
/// becomes (i, i+1). choice 1 starts just counterclockwise of f.first, choice 2 of f.second.
Relabeling relabel_for_diagonal(Diagonal f, int n, int choice);

/// The conventional (n+2)-gon.
LabeledPolygon conventional_polygon(int n);

/// Projection of a conventional triangulation onto the face of f, via relabeling.
Triangulation project_onto_diagonal(const Triangulation& t, Diagonal f, int n, int choice);

/// Vertex i marked Upper and i+1 marked Lower; otherwise (i,i+1) is not the
/// diagonal the projection is built around and the equality can fail.
bool theorem_applies(const LabeledPolygon& p, int i);

struct TheoremCheck {
  Permutation projected;   ///< parabolic_projection(w, i)
  Triangulation left;      ///< T(projected)
  Triangulation right;     ///< projection of T(w)
  bool equal = false;
};

TheoremCheck check_projection_theorem(int n, int i, const Permutation& w, Mark choice1 = Mark::kLower,
                                      Mark choice_n = Mark::kLower);
bool verify_projection_theorem(int n, int i, const Permutation& w, Mark choice1 = Mark::kLower,
                               Mark choice_n = Mark::kLower);

/// All triangulations of p, each a sorted set of interior diagonals.
std::vector<Triangulation> all_triangulations(const LabeledPolygon& p);

/// Flip graph on all_triangulations(p); faces are "contains d" for each interior d.
struct TriangulationComplex {
  std::vector<Triangulation> triangulations;
  std::vector<Diagonal> diagonals;  ///< face k is "contains diagonals[k]"
  FaceSystem faces;
};

TriangulationComplex triangulation_complex(const LabeledPolygon& p);

Permutation parse_permutation(const std::string& text, int n);
std::string format_permutation(const Permutation& w);
bool is_permutation(const Permutation& w, int n);

/// One-line notation <-> element of A{n-1}.
GroupElement to_element(const CoxeterSystem& sys, const Permutation& w);
Permutation to_permutation(const CoxeterSystem& sys, const GroupElement& w);

std::string to_string(Mark m);
std::string format_triangulation(const Triangulation& t);

}  // namespace coxfaces::type_a
