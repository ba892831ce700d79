#include "coxfaces/sortable.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <string>

#include "coxfaces/errors.hpp"

namespace coxfaces {

namespace {

void check_permutation(const std::vector<int>& order, int rank) {
  if (static_cast<int>(order.size()) != rank)
    throw ContractViolation("Coxeter element order must use each of the " + std::to_string(rank) +
                            " simple reflections once");
  std::vector<bool> seen(rank, false);
  for (int s : order) {
    if (s < 0 || s >= rank || seen[s]) throw ContractViolation("Coxeter element order is not a permutation");
    seen[s] = true;
  }
}

}  // namespace

CoxeterElementOrder::CoxeterElementOrder(std::vector<int> order) : order_(std::move(order)) {
  std::vector<int> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
      (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= kMaxRank)))
    throw ContractViolation("Coxeter element order repeats or misnames a simple reflection");
}

CoxeterElementOrder::CoxeterElementOrder(std::vector<int> order, int rank) : order_(std::move(order)) {
  check_permutation(order_, rank);
}

CoxeterElementOrder CoxeterElementOrder::linear(int rank) {
  std::vector<int> order(rank);
  for (int i = 0; i < rank; ++i) order[i] = i;
  return CoxeterElementOrder(std::move(order), rank);
}

CoxeterElementOrder CoxeterElementOrder::bipartite(const CoxeterSystem& sys) {
  const int n = sys.rank();
  std::vector<int> colour(n, -1);
  for (int root = 0; root < n; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int s = queue.front();
      queue.pop_front();
      for (int t = 0; t < n; ++t) {
        if (t == s || sys.commute(s, t)) continue;
        if (colour[t] < 0) {
          colour[t] = 1 - colour[s];
          queue.push_back(t);
        } else if (colour[t] == colour[s]) {
          throw InternalInvariant("Coxeter diagram is not bipartite");
        }
      }
    }
  }
  std::vector<int> order;
  for (int pass = 0; pass < 2; ++pass)
    for (int s = 0; s < n; ++s)
      if (colour[s] == pass) order.push_back(s);
  return CoxeterElementOrder(std::move(order), n);
}

CoxeterElementOrder CoxeterElementOrder::parse(std::string_view text, const CoxeterSystem& sys) {
  if (text == "linear") return linear(sys.rank());
  if (text == "bipartite") return bipartite(sys);
  const Word word = parse_word(text, sys.rank());
  return CoxeterElementOrder(word.letters, sys.rank());
}

int CoxeterElementOrder::position_of(int s) const {
  auto it = std::find(order_.begin(), order_.end(), s);
  return it == order_.end() ? -1 : static_cast<int>(it - order_.begin());
}

CoxeterElementOrder CoxeterElementOrder::rotated() const {
  CoxeterElementOrder out = *this;
  if (!out.order_.empty()) std::rotate(out.order_.begin(), out.order_.begin() + 1, out.order_.end());
  return out;
}

CoxeterElementOrder CoxeterElementOrder::without_front() const {
  CoxeterElementOrder out = *this;
  if (!out.order_.empty()) out.order_.erase(out.order_.begin());
  return out;
}

ParabolicSet CoxeterElementOrder::support() const {
  ParabolicSet j;
  for (int s : order_) j.insert(s);
  return j;
}

GroupElement CoxeterElementOrder::element(const CoxeterSystem& sys) const { return sys.element_of(word()); }

CoxeterElementOrder restrict_c(const CoxeterElementOrder& c, ParabolicSet j) {
  std::vector<int> kept;
  for (int s : c.letters())
    if (j.contains(s)) kept.push_back(s);
  return CoxeterElementOrder(std::move(kept));
}

SortingWord sorting_word(const CoxeterSystem& sys, const GroupElement& w, const CoxeterElementOrder& c) {
  sys.require_member(w);
  SortingWord out;
  GroupElement rest = w;
  while (!rest.is_identity()) {
    std::vector<int> block;
    for (int pos = 0; pos < c.size(); ++pos) {
      const int s = c.letters()[pos];
      if (sys.is_left_descent(rest, s)) {
        block.push_back(pos);
        out.flat.letters.push_back(s);
        sys.left_multiply_in_place(s, rest);
      }
    }
    if (block.empty()) throw ContractViolation("element is not in the parabolic subgroup generated by c");
    out.blocks.push_back(std::move(block));
  }
  return out;
}

bool is_sortable(const CoxeterSystem& sys, const GroupElement& w, const CoxeterElementOrder& c) {
  const SortingWord sw = sorting_word(sys, w, c);
  for (std::size_t i = 1; i < sw.blocks.size(); ++i)
    if (!std::includes(sw.blocks[i - 1].begin(), sw.blocks[i - 1].end(), sw.blocks[i].begin(), sw.blocks[i].end()))
      return false;
  return true;
}

GroupElement pi_down(const CoxeterSystem& sys, const GroupElement& w, const CoxeterElementOrder& c) {
  sys.require_member(w);
  GroupElement prefix = sys.identity();
  GroupElement rest = w;
  std::vector<int> order = c.letters();
  while (!rest.is_identity()) {
    if (order.empty()) throw ContractViolation("pi_down: element lies outside the parabolic generated by c");
    const int s = order.front();
    if (sys.is_left_descent(rest, s)) {
      // pi^c(w) = s pi^{scs}(sw)
      sys.right_multiply_in_place(prefix, s);
      sys.left_multiply_in_place(s, rest);
      std::rotate(order.begin(), order.begin() + 1, order.end());
    } else {
      // pi^c(w) = pi^{sc}(w_<s>)
      order.erase(order.begin());
      ParabolicSet j;
      for (int t : order) j.insert(t);
      rest = sys.parabolic_component(rest, j);
    }
  }
  return prefix;
}

std::vector<GroupElement> cover_reflections(const CoxeterSystem& sys, const GroupElement& w) {
  std::vector<GroupElement> out;
  for (int s = 0; s < sys.rank(); ++s)
    if (sys.is_right_descent(w, s)) out.push_back(sys.conjugate(sys.simple(s), w));
  std::sort(out.begin(), out.end(), [&](const GroupElement& a, const GroupElement& b) {
    return sys.key(a).images < sys.key(b).images;
  });
  return out;
}

namespace {

void require_initial(const CoxeterElementOrder& c, int s) {
  if (c.empty() || c.front() != s) throw ContractViolation("simple reflection is not initial in c");
}

}  // namespace

GroupElement join_with_initial(const CoxeterSystem& sys, int s, const GroupElement& w,
                               const CoxeterElementOrder& c) {
  require_initial(c, s);
  if (!sys.in_parabolic(w, ParabolicSet::all_but(s, sys.rank())) || !is_sortable(sys, w, c.without_front()))
    throw ContractViolation("join_with_initial: w is not sc-sortable in W_<s>");
  return sys.weak_join(sys.simple(s), w);
}

GroupElement proj_sortable(const CoxeterSystem& sys, const GroupElement& u, int s, const CoxeterElementOrder& c) {
  require_initial(c, s);
  if (!is_sortable(sys, u, c)) throw ContractViolation("proj_sortable: u is not c-sortable");
  return sys.parabolic_component(u, ParabolicSet::all_but(s, sys.rank()));
}

std::optional<int> CambrianLattice::find(const CoxeterSystem& sys, const GroupElement& w) const {
  auto it = index.find(sys.key(w));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<int>> CambrianLattice::adjacency() const {
  std::vector<std::vector<int>> adj(elements.size());
  for (const auto& e : edges) {
    adj[e.upper].push_back(e.lower);
    adj[e.lower].push_back(e.upper);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

CambrianLattice enumerate_sortables(const CoxeterSystem& sys, const CoxeterElementOrder& c) {
  if (c.size() != sys.rank()) throw ContractViolation("Coxeter element order has the wrong rank");
  CambrianLattice lattice;
  lattice.c = c;
  lattice.elements.push_back(sys.longest());
  lattice.index.emplace(sys.key(sys.longest()), 0);
  for (std::size_t head = 0; head < lattice.elements.size(); ++head) {
    std::vector<int> targets;
    for (int s = 0; s < sys.rank(); ++s) {
      const GroupElement& w = lattice.elements[head];
      if (!sys.is_right_descent(w, s)) continue;
      GroupElement lower = pi_down(sys, sys.right_multiply(w, s), c);
      auto [it, inserted] = lattice.index.emplace(sys.key(lower), static_cast<int>(lattice.elements.size()));
      if (inserted) lattice.elements.push_back(std::move(lower));
      const int target = it->second;
      if (std::find(targets.begin(), targets.end(), target) != targets.end())
        throw InternalInvariant("two right descents of one sortable element give the same Cambrian cover");
      targets.push_back(target);
      lattice.edges.push_back({static_cast<int>(head), target, s});
    }
  }
  return lattice;
}

}  // namespace coxfaces
