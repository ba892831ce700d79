#include "coxfaces/type_a.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "coxfaces/errors.hpp"

namespace coxfaces::type_a {

namespace {

constexpr int kMaxN = 32;

void check_n(int n) {
  if (n < 2 || n > kMaxN) throw ContractViolation("type A model needs 2 <= n <= " + std::to_string(kMaxN));
}

void check_index(int n, int i) {
  if (i < 1 || i > n - 1) throw ContractViolation("index i must satisfy 1 <= i <= n-1");
}

}  // namespace

Permutation permutation_of_word(const std::vector<int>& letters, int n) {
  Permutation p(n);
  for (int x = 0; x < n; ++x) p[x] = x + 1;
  for (int s : letters) {
    if (s < 0 || s >= n - 1) throw ContractViolation("letter out of range for S_" + std::to_string(n));
    std::swap(p[s], p[s + 1]);
  }
  return p;
}

CycleForm cycle_form(const CoxeterElementOrder& c, int n) {
  check_n(n);
  if (c.size() != n - 1 || c.support().mask() != ((std::uint32_t{1} << (n - 1)) - 1))
    throw ContractViolation("Coxeter element order has the wrong rank for S_" + std::to_string(n));
  const Permutation p = permutation_of_word(c.letters(), n);
  CycleForm cf;
  cf.n = n;
  int x = 1;
  do {
    cf.cycle.push_back(x);
    x = p[x - 1];
  } while (x != 1 && static_cast<int>(cf.cycle.size()) <= n);
  if (static_cast<int>(cf.cycle.size()) != n) throw ContractViolation("c is not an n-cycle");
  const auto at_n = std::find(cf.cycle.begin(), cf.cycle.end(), n);
  cf.lowers.assign(cf.cycle.begin() + 1, at_n);
  cf.uppers.assign(at_n + 1, cf.cycle.end());
  std::reverse(cf.uppers.begin(), cf.uppers.end());
  if (!std::is_sorted(cf.lowers.begin(), cf.lowers.end()) || !std::is_sorted(cf.uppers.begin(), cf.uppers.end()))
    throw ContractViolation("cycle of c does not have the form (1, lowers ascending, n, uppers descending)");
  return cf;
}

int LabeledPolygon::position(int x) const {
  auto it = std::find(boundary.begin(), boundary.end(), x);
  if (it == boundary.end()) throw ContractViolation("label " + std::to_string(x) + " is not on the polygon");
  return static_cast<int>(it - boundary.begin());
}

LabeledPolygon polygon_labeling(const CycleForm& cf, Mark choice1, Mark choice_n) {
  LabeledPolygon p;
  p.n = cf.n;
  p.marks.assign(cf.n + 1, Mark::kLower);
  for (int x : cf.uppers) p.marks[x] = Mark::kUpper;
  for (int x : cf.lowers) p.marks[x] = Mark::kLower;
  p.marks[1] = choice1;
  p.marks[cf.n] = choice_n;
  p.boundary.push_back(0);
  for (int x = 1; x <= cf.n; ++x)
    if (p.marks[x] == Mark::kLower) p.boundary.push_back(x);
  p.boundary.push_back(cf.n + 1);
  for (int x = cf.n; x >= 1; --x)
    if (p.marks[x] == Mark::kUpper) p.boundary.push_back(x);
  return p;
}

Diagonal make_diagonal(int a, int b) { return a < b ? Diagonal{a, b} : Diagonal{b, a}; }

bool is_boundary_edge(const LabeledPolygon& p, Diagonal d) {
  const int m = static_cast<int>(p.boundary.size());
  const int pa = p.position(d.first), pb = p.position(d.second);
  const int gap = (pb - pa + m) % m;
  return gap == 1 || gap == m - 1;
}

bool is_interior(const LabeledPolygon& p, Diagonal d) {
  return d.first != d.second && !is_boundary_edge(p, d);
}

bool crosses(const LabeledPolygon& p, Diagonal d, Diagonal e) {
  int a = p.position(d.first), b = p.position(d.second);
  int c = p.position(e.first), f = p.position(e.second);
  if (a == c || a == f || b == c || b == f) return false;
  if (a > b) std::swap(a, b);
  if (c > f) std::swap(c, f);
  return (a < c && c < b && b < f) || (c < a && a < f && f < b);
}

std::vector<Diagonal> interior_diagonals(const LabeledPolygon& p) {
  std::vector<Diagonal> out;
  for (int a = 0; a <= p.n + 1; ++a)
    for (int b = a + 1; b <= p.n + 1; ++b)
      if (is_interior(p, {a, b})) out.emplace_back(a, b);
  return out;
}

bool is_triangulation(const LabeledPolygon& p, const Triangulation& t) {
  if (static_cast<int>(t.size()) != p.n - 1) return false;
  for (const Diagonal& d : t) {
    if (d.first < 0 || d.second > p.n + 1 || d.first >= d.second || !is_interior(p, d)) return false;
    for (const Diagonal& e : t)
      if (d < e && crosses(p, d, e)) return false;
  }
  return true;
}

std::vector<std::vector<int>> paths_of(const Permutation& w, const LabeledPolygon& p) {
  if (!is_permutation(w, p.n)) throw ContractViolation("not a permutation of 1.." + std::to_string(p.n));
  std::vector<int> path{0};
  for (int x = 1; x <= p.n; ++x)
    if (p.marks[x] == Mark::kLower) path.push_back(x);
  path.push_back(p.n + 1);
  std::vector<std::vector<int>> out{path};
  for (int x : w) {
    auto it = std::lower_bound(path.begin(), path.end(), x);
    const bool present = it != path.end() && *it == x;
    if (p.marks[x] == Mark::kLower) {
      if (!present) throw ContractViolation("lower vertex " + std::to_string(x) + " is not on the current path");
      path.erase(it);
    } else {
      if (present) throw ContractViolation("upper vertex " + std::to_string(x) + " is already on the path");
      path.insert(it, x);
    }
    out.push_back(path);
  }
  return out;
}

Triangulation triangulation_of(const Permutation& w, const LabeledPolygon& p) {
  Triangulation t;
  for (const auto& path : paths_of(w, p))
    for (std::size_t k = 1; k < path.size(); ++k) {
      const Diagonal d = make_diagonal(path[k - 1], path[k]);
      if (is_interior(p, d)) t.insert(d);
    }
  return t;
}

CoxeterElementOrder parse_order(const std::string& text, int n) {
  check_n(n);
  std::vector<int> letters;
  if (text == "linear") {
    for (int s = 0; s < n - 1; ++s) letters.push_back(s);
  } else if (text == "bipartite") {
    for (int start = 0; start < 2; ++start)
      for (int s = start; s < n - 1; s += 2) letters.push_back(s);
  } else {
    letters = parse_word(text, n - 1).letters;
  }
  return CoxeterElementOrder(std::move(letters), n - 1);
}

CoxeterElementOrder c_i(int n, int i) {
  check_n(n);
  check_index(n, i);
  std::vector<int> letters;
  for (int s = i; s <= n - 1; ++s) letters.push_back(s - 1);
  for (int s = 1; s <= i - 1; ++s) letters.push_back(s - 1);
  return CoxeterElementOrder(std::move(letters), n - 1);
}

LabeledPolygon c_i_labeling(int n, int i) {
  return polygon_labeling(cycle_form(c_i(n, i), n), i == 1 ? Mark::kUpper : Mark::kLower, Mark::kLower);
}

std::set<Diagonal> project_diagonal(Diagonal d, int i, const LabeledPolygon& p) {
  check_index(p.n, i);
  d = make_diagonal(d.first, d.second);
  std::set<Diagonal> candidates;
  if (d.first < i && d.second > i) {
    candidates.insert(make_diagonal(d.first, i + 1));
    candidates.insert(make_diagonal(i, d.second));
  } else {
    candidates.insert(d);
  }
  std::set<Diagonal> out;
  for (const Diagonal& e : candidates)
    if (is_interior(p, e)) out.insert(e);
  return out;
}

Triangulation project_triangulation(const Triangulation& t, int i, const LabeledPolygon& p) {
  check_index(p.n, i);
  Triangulation out;
  const Diagonal fixed{i, i + 1};
  if (is_interior(p, fixed)) out.insert(fixed);
  for (const Diagonal& d : t) {
    const auto part = project_diagonal(d, i, p);
    out.insert(part.begin(), part.end());
  }
  return out;
}

std::set<Diagonal> stt_project(Diagonal d, int i, int x, const LabeledPolygon& p) {
  check_index(p.n, i);
  if (x != i && x != i + 1) throw ContractViolation("x must be i or i+1");
  d = make_diagonal(d.first, d.second);
  std::set<Diagonal> candidates;
  if (d.first < i && d.second > i) {
    if (d.first != x) candidates.insert(make_diagonal(d.first, x));
    if (d.second != x) candidates.insert(make_diagonal(x, d.second));
  } else {
    candidates.insert(d);
  }
  std::set<Diagonal> out;
  for (const Diagonal& e : candidates)
    if (is_interior(p, e)) out.insert(e);
  return out;
}

Permutation parabolic_projection(const Permutation& w, int i) {
  check_index(static_cast<int>(w.size()), i);
  Permutation out;
  for (int x : w)
    if (x <= i) out.push_back(x);
  for (int x : w)
    if (x > i) out.push_back(x);
  return out;
}

LabeledPolygon conventional_polygon(int n) {
  LabeledPolygon p;
  p.n = n;
  p.marks.assign(n + 1, Mark::kLower);
  for (int x = 0; x <= n + 1; ++x) p.boundary.push_back(x);
  return p;
}

Relabeling relabel_for_diagonal(Diagonal f, int n, int choice) {
  check_n(n);
  f = make_diagonal(f.first, f.second);
  const int m = n + 2;
  if (f.first < 0 || f.second >= m) throw ContractViolation("diagonal label out of range");
  if (!is_interior(conventional_polygon(n), f)) throw ContractViolation("relabel_for_diagonal needs an interior diagonal");
  if (choice != 1 && choice != 2) throw ContractViolation("choice must be 1 or 2");
  Relabeling r;
  int start;
  if (choice == 1) {
    start = (f.first + 1) % m;
    r.i = f.second - f.first - 1;
  } else {
    start = (f.second + 1) % m;
    r.i = ((f.first - f.second - 1) % m + m) % m;
  }
  std::vector<int> sequence;
  for (int x = 0; x <= n + 1; ++x)
    if (x != r.i) sequence.push_back(x);
  sequence.push_back(r.i);
  r.map.assign(m, -1);
  for (int k = 0; k < m; ++k) r.map[(start + k) % m] = sequence[k];
  return r;
}

Triangulation project_onto_diagonal(const Triangulation& t, Diagonal f, int n, int choice) {
  const Relabeling r = relabel_for_diagonal(f, n, choice);
  const LabeledPolygon p = c_i_labeling(n, r.i);
  std::vector<int> back(r.map.size());
  for (std::size_t x = 0; x < r.map.size(); ++x) back[r.map[x]] = static_cast<int>(x);
  Triangulation moved;
  for (const Diagonal& d : t) moved.insert(make_diagonal(r.map[d.first], r.map[d.second]));
  Triangulation out;
  for (const Diagonal& d : project_triangulation(moved, r.i, p)) out.insert(make_diagonal(back[d.first], back[d.second]));
  return out;
}

bool theorem_applies(const LabeledPolygon& p, int i) {
  check_index(p.n, i);
  return p.marks[i] == Mark::kUpper && p.marks[i + 1] == Mark::kLower;
}

TheoremCheck check_projection_theorem(int n, int i, const Permutation& w, Mark choice1, Mark choice_n) {
  check_n(n);
  check_index(n, i);
  if (!is_permutation(w, n)) throw ContractViolation("not a permutation of 1.." + std::to_string(n));
  const LabeledPolygon p = polygon_labeling(cycle_form(c_i(n, i), n), choice1, choice_n);
  TheoremCheck out;
  out.projected = parabolic_projection(w, i);
  out.left = triangulation_of(out.projected, p);
  out.right = project_triangulation(triangulation_of(w, p), i, p);
  out.equal = out.left == out.right;
  return out;
}

bool verify_projection_theorem(int n, int i, const Permutation& w, Mark choice1, Mark choice_n) {
  return check_projection_theorem(n, i, w, choice1, choice_n).equal;
}

std::vector<Triangulation> all_triangulations(const LabeledPolygon& p) {
  const auto& b = p.boundary;
  // Triangulations of the sub-polygon on boundary positions lo..hi (base lo-hi).
  std::function<std::vector<std::vector<Diagonal>>(int, int)> sub = [&](int lo, int hi) {
    std::vector<std::vector<Diagonal>> out;
    if (hi - lo < 2) {
      out.emplace_back();
      return out;
    }
    for (int k = lo + 1; k < hi; ++k) {
      const auto left = sub(lo, k);
      const auto right = sub(k, hi);
      for (const auto& l : left)
        for (const auto& r : right) {
          std::vector<Diagonal> t = l;
          t.insert(t.end(), r.begin(), r.end());
          if (k - lo >= 2) t.push_back(make_diagonal(b[lo], b[k]));
          if (hi - k >= 2) t.push_back(make_diagonal(b[k], b[hi]));
          out.push_back(std::move(t));
        }
    }
    return out;
  };
  std::vector<Triangulation> out;
  for (const auto& t : sub(0, static_cast<int>(b.size()) - 1)) out.emplace_back(t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

TriangulationComplex triangulation_complex(const LabeledPolygon& p) {
  TriangulationComplex out;
  out.triangulations = all_triangulations(p);
  out.diagonals = interior_diagonals(p);
  const int count = static_cast<int>(out.triangulations.size());
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b) {
      std::vector<Diagonal> common;
      std::set_intersection(out.triangulations[a].begin(), out.triangulations[a].end(),
                            out.triangulations[b].begin(), out.triangulations[b].end(), std::back_inserter(common));
      if (static_cast<int>(common.size()) == p.n - 2) edges.emplace_back(a, b);
    }
  out.faces.description = "triangulations of the " + std::to_string(p.n + 2) + "-gon";
  out.faces.graph = Graph::from_edges(count, edges);
  for (const auto& t : out.triangulations) out.faces.labels.push_back(format_triangulation(t));
  for (const Diagonal& d : out.diagonals) {
    Face f;
    f.name = "(" + std::to_string(d.first) + "," + std::to_string(d.second) + ")";
    for (int v = 0; v < count; ++v)
      if (out.triangulations[v].count(d)) f.vertices.push_back(v);
    out.faces.faces.push_back(std::move(f));
  }
  return out;
}

bool is_permutation(const Permutation& w, int n) {
  if (static_cast<int>(w.size()) != n) return false;
  std::vector<bool> seen(n + 1, false);
  for (int x : w) {
    if (x < 1 || x > n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Permutation parse_permutation(const std::string& text, int n) {
  Permutation w;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw ContractViolation("malformed permutation entry '" + token + "'");
    w.push_back(value);
  }
  if (!is_permutation(w, n)) throw ContractViolation("'" + text + "' is not a permutation of 1.." + std::to_string(n));
  return w;
}

std::string format_permutation(const Permutation& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "," : "") + std::to_string(w[k]);
  return out;
}

GroupElement to_element(const CoxeterSystem& sys, const Permutation& w) {
  const int n = sys.rank() + 1;
  if (!is_permutation(w, n)) throw ContractViolation("not a permutation of 1.." + std::to_string(n));
  Permutation p = w;
  std::vector<int> recorded;
  for (bool changed = true; changed;) {
    changed = false;
    for (int s = 0; s + 1 < n; ++s)
      if (p[s] > p[s + 1]) {
        std::swap(p[s], p[s + 1]);
        recorded.push_back(s);
        changed = true;
      }
  }
  std::reverse(recorded.begin(), recorded.end());
  return sys.element_of(Word{recorded});
}

Permutation to_permutation(const CoxeterSystem& sys, const GroupElement& w) {
  return permutation_of_word(sys.reduced_word(w).letters, sys.rank() + 1);
}

std::string to_string(Mark m) { return m == Mark::kUpper ? "U" : "L"; }

std::string format_triangulation(const Triangulation& t) {
  std::string out = "{";
  bool first = true;
  for (const Diagonal& d : t) {
    out += (first ? "" : ",") + std::string("(") + std::to_string(d.first) + "," + std::to_string(d.second) + ")";
    first = false;
  }
  return out + "}";
}

}  // namespace coxfaces::type_a
