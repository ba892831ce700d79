#include "coxfaces/subword.hpp"

#include <algorithm>
#include <array>

#include "coxfaces/errors.hpp"

namespace coxfaces {

namespace {

// Images of the simple roots under an element; equal arrays mean equal elements.
using SimpleImages = std::array<std::int16_t, kMaxRank>;

SimpleImages images_of(const CoxeterSystem& sys, const GroupElement& w) { return sys.key(w).images; }

SimpleImages identity_images(const CoxeterSystem& sys) { return images_of(sys, sys.identity()); }

// Images under s * x, given images under x.
void left_apply(const CoxeterSystem& sys, int s, SimpleImages& img) {
  for (int t = 0; t < sys.rank(); ++t) {
    const SignedRoot r = SignedRoot::from_code(img[t]);
    img[t] = sys.simple_action(s, r.index()).flipped_if(r.negative()).code();
  }
}

void check_size(const CoxeterSystem& sys, const VertexSubword& p, const QWord& q) {
  if (static_cast<int>(p.positions.size()) != sys.rank())
    throw ContractViolation("a vertex-subword has exactly n positions");
  for (std::size_t i = 0; i < p.positions.size(); ++i) {
    if (p.positions[i] < 0 || p.positions[i] >= q.size()) throw ContractViolation("position outside Q");
    if (i > 0 && p.positions[i] <= p.positions[i - 1])
      throw ContractViolation("vertex-subword positions must be strictly increasing");
  }
}

}  // namespace

bool VertexSubword::contains(int p) const { return std::binary_search(positions.begin(), positions.end(), p); }

QWord build_Q(const CoxeterSystem& sys, const CoxeterElementOrder& c) {
  if (c.size() != sys.rank()) throw ContractViolation("Coxeter element order has the wrong rank");
  QWord q;
  q.c = c;
  q.letters = c.letters();
  const SortingWord wo = sorting_word(sys, sys.longest(), c);
  q.letters.insert(q.letters.end(), wo.flat.letters.begin(), wo.flat.letters.end());
  return q;
}

bool is_vertex_subword(const CoxeterSystem& sys, const VertexSubword& p, const QWord& q) {
  check_size(sys, p, q);
  GroupElement w = sys.identity();
  for (int pos = 0; pos < q.size(); ++pos)
    if (!p.contains(pos)) sys.right_multiply_in_place(w, q.letters[pos]);
  return w.length() == sys.num_positive_roots();
}

FlipResult flip(const CoxeterSystem& sys, const VertexSubword& p, int leaving, const QWord& q) {
  check_size(sys, p, q);
  if (!p.contains(leaving)) throw ContractViolation("flip: position is not in the vertex-subword");
  // Keep R = P \ {leaving}. For each candidate j outside R, the complement of
  // R + {j} splits as L_j * R_j around j; it has length N iff L_j R_j = w_o,
  // i.e. R_j = L_j^{-1} w_o. Both sides are tracked as simple-root images.
  const int len = q.size();
  std::vector<char> kept(len, 0);
  for (int pos : p.positions)
    if (pos != leaving) kept[pos] = 1;

  std::vector<SimpleImages> suffix(len);
  SimpleImages right = identity_images(sys);
  for (int pos = len - 1; pos >= 0; --pos) {
    if (kept[pos]) continue;
    suffix[pos] = right;
    left_apply(sys, q.letters[pos], right);
  }
  SimpleImages left_inv_wo = images_of(sys, sys.longest());
  int entering = -1;
  for (int pos = 0; pos < len; ++pos) {
    if (kept[pos]) continue;
    if (pos != leaving && suffix[pos] == left_inv_wo) {
      if (entering >= 0) throw InternalInvariant("flip is not unique");
      entering = pos;
    }
    left_apply(sys, q.letters[pos], left_inv_wo);
  }
  if (entering < 0) throw InternalInvariant("no flip exists at this position");
  FlipResult out;
  out.entering = entering;
  out.vertex.positions.reserve(p.positions.size());
  for (int pos = 0; pos < len; ++pos)
    if (kept[pos] || pos == entering) out.vertex.positions.push_back(pos);
  return out;
}

int FlipGraph::find(const VertexSubword& v) const {
  auto it = index.find(v.positions);
  return it == index.end() ? -1 : it->second;
}

std::size_t FlipGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adjacency) total += row.size();
  return total / 2;
}

FlipGraph flip_graph(const CoxeterSystem& sys, const QWord& q) {
  FlipGraph g;
  g.q = q;
  VertexSubword start;
  for (int i = 0; i < sys.rank(); ++i) start.positions.push_back(i);
  g.vertices.push_back(start);
  g.index.emplace(start.positions, 0);
  g.adjacency.emplace_back();
  for (std::size_t head = 0; head < g.vertices.size(); ++head) {
    const VertexSubword current = g.vertices[head];
    for (int leaving : current.positions) {
      FlipResult next = flip(sys, current, leaving, q);
      auto [it, inserted] = g.index.emplace(next.vertex.positions, static_cast<int>(g.vertices.size()));
      if (inserted) {
        g.vertices.push_back(std::move(next.vertex));
        g.adjacency.emplace_back();
      }
      g.adjacency[head].push_back(it->second);
    }
  }
  for (auto& row : g.adjacency) std::sort(row.begin(), row.end());
  g.letter_faces.assign(q.size(), {});
  for (int v = 0; v < g.size(); ++v)
    for (int pos : g.vertices[v].positions) g.letter_faces[pos].push_back(v);
  return g;
}

const std::vector<int>& letter_face(int p, const FlipGraph& g) {
  if (p < 0 || p >= static_cast<int>(g.letter_faces.size())) throw ContractViolation("letter position out of range");
  return g.letter_faces[p];
}

int conjugate_by_longest(const CoxeterSystem& sys, int s) {
  const ElementKey target = sys.key(sys.conjugate(sys.simple(s), sys.longest()));
  for (int t = 0; t < sys.rank(); ++t)
    if (sys.key(sys.simple(t)) == target) return t;
  throw InternalInvariant("w_o s w_o is not a simple reflection");
}

RotationMap rotation_map(const CoxeterSystem& sys, const QWord& q) {
  const int len = q.size();
  const int s = q.letters.front();
  std::vector<int> word(q.letters.begin() + 1, q.letters.end());
  word.push_back(conjugate_by_longest(sys, s));
  // slot_origin[slot]: raw slot the letter now sitting in `slot` started from.
  std::vector<int> slot_origin(len);
  for (int k = 0; k < len; ++k) slot_origin[k] = k;

  RotationMap out;
  out.target = build_Q(sys, q.c.rotated());
  const std::vector<int>& target = out.target.letters;
  for (int t = 0; t < len; ++t) {
    int k = t;
    while (k < len && word[k] != target[t]) ++k;
    if (k == len) throw InternalInvariant("rotated word is not commutation-equivalent to c' w_o(c')");
    for (int between = t; between < k; ++between)
      if (!sys.commute(word[between], word[k]))
        throw InternalInvariant("rotated word is not commutation-equivalent to c' w_o(c')");
    for (int j = k; j > t; --j) {
      std::swap(word[j], word[j - 1]);
      std::swap(slot_origin[j], slot_origin[j - 1]);
    }
  }
  // Old position p sits at raw slot p - 1 (position 0 goes to the end).
  std::vector<int> raw_to_final(len);
  for (int slot = 0; slot < len; ++slot) raw_to_final[slot_origin[slot]] = slot;
  out.position_map.resize(len);
  for (int p = 0; p < len; ++p) out.position_map[p] = raw_to_final[p == 0 ? len - 1 : p - 1];
  return out;
}

VertexSubword apply_rotation(const RotationMap& rotation, const VertexSubword& p) {
  VertexSubword out;
  for (int pos : p.positions) out.positions.push_back(rotation.position_map.at(pos));
  std::sort(out.positions.begin(), out.positions.end());
  return out;
}

std::pair<VertexSubword, QWord> cambrian_rotate(const CoxeterSystem& sys, const VertexSubword& p, const QWord& q) {
  check_size(sys, p, q);
  RotationMap rotation = rotation_map(sys, q);
  VertexSubword moved = apply_rotation(rotation, p);
  return {std::move(moved), std::move(rotation.target)};
}

}  // namespace coxfaces
