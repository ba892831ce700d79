#pragma once

#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coxfaces/coxeter.hpp"

namespace coxfaces {

/// A reduced word for a Coxeter element: each simple index exactly once.
class CoxeterElementOrder {
 public:
  CoxeterElementOrder() = default;
  /// Throws ContractViolation unless `order` lists each simple index of a
  /// rank-`rank` system exactly once (rank = order.size() when omitted).
  explicit CoxeterElementOrder(std::vector<int> order);
  CoxeterElementOrder(std::vector<int> order, int rank);

  /// s_1 s_2 ... s_n in diagram order.
  static CoxeterElementOrder linear(int rank);
  /// All simples of one diagram colour class, then the other.
  static CoxeterElementOrder bipartite(const CoxeterSystem& sys);
  /// "linear", "bipartite", or 1-based comma-separated indices.
  static CoxeterElementOrder parse(std::string_view text, const CoxeterSystem& sys);

  const std::vector<int>& letters() const { return order_; }
  int size() const { return static_cast<int>(order_.size()); }
  bool empty() const { return order_.empty(); }
  int front() const { return order_.front(); }
  int position_of(int s) const;
  bool contains(int s) const { return position_of(s) >= 0; }
  /// The order s_2 ... s_n s_1, i.e. the word of s^{-1} c s for s = s_1.
  CoxeterElementOrder rotated() const;
  /// The order with its first letter removed (sc in W_<s>).
  CoxeterElementOrder without_front() const;
  ParabolicSet support() const;

  GroupElement element(const CoxeterSystem& sys) const;
  Word word() const { return Word{order_}; }

  friend bool operator==(const CoxeterElementOrder&, const CoxeterElementOrder&) = default;

 private:
  std::vector<int> order_;
};

/// Subsequence of `c` on J.
CoxeterElementOrder restrict_c(const CoxeterElementOrder& c, ParabolicSet j);

/// c-sorting word: greedy leftmost reduced subword of c^infinity.
struct SortingWord {
  /// blocks[i] holds the positions (indices into c) used in copy i, ascending.
  std::vector<std::vector<int>> blocks;
  Word flat;
};

SortingWord sorting_word(const CoxeterSystem& sys, const GroupElement& w, const CoxeterElementOrder& c);
bool is_sortable(const CoxeterSystem& sys, const GroupElement& w, const CoxeterElementOrder& c);

/// Largest c-sortable element weakly below w.
GroupElement pi_down(const CoxeterSystem& sys, const GroupElement& w, const CoxeterElementOrder& c);

/// { w s w^{-1} : s a right descent of w }, sorted by element key.
std::vector<GroupElement> cover_reflections(const CoxeterSystem& sys, const GroupElement& w);

/// s v w for s initial in c and w in Sort(W_<s>, sc).
GroupElement join_with_initial(const CoxeterSystem& sys, int s, const GroupElement& w,
                               const CoxeterElementOrder& c);

/// The normalization map u -> u_<s> onto Sort(W_<s>, sc); s initial in c, u c-sortable.
GroupElement proj_sortable(const CoxeterSystem& sys, const GroupElement& u, int s, const CoxeterElementOrder& c);

struct CambrianEdge {
  int upper = 0;   ///< index of w
  int lower = 0;   ///< index of pi_down(ws)
  int simple = 0;  ///< the right descent s
};

/// Sort(W, c) with its cover graph; every edge carries its unique (w, s) label.
struct CambrianLattice {
  CoxeterElementOrder c;
  std::vector<GroupElement> elements;
  std::vector<CambrianEdge> edges;
  std::unordered_map<ElementKey, int, ElementKeyHash> index;

  std::optional<int> find(const CoxeterSystem& sys, const GroupElement& w) const;
  int size() const { return static_cast<int>(elements.size()); }
  /// Undirected adjacency lists, neighbours sorted.
  std::vector<std::vector<int>> adjacency() const;
};

/// Downward search from w_o along w -> pi_down(ws); never enumerates W.
CambrianLattice enumerate_sortables(const CoxeterSystem& sys, const CoxeterElementOrder& c);

}  // namespace coxfaces
