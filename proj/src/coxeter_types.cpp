// Type-id parsing, Cartan data and root-system construction.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <map>
#include <regex>
#include <sstream>

#include "coxfaces/coxeter.hpp"
#include "coxfaces/errors.hpp"

namespace coxfaces {

int Golden::sign() const {
  // a + b phi = (x + y sqrt 5) / 2 with x = 2a + b, y = b.
  const std::int64_t x = 2 * a_ + b_;
  const std::int64_t y = b_;
  if (x >= 0 && y >= 0) return (x == 0 && y == 0) ? 0 : 1;
  if (x <= 0 && y <= 0) return -1;
  const std::int64_t x2 = x * x;
  const std::int64_t y2 = 5 * y * y;
  if (x > 0) return x2 > y2 ? 1 : -1;  // y < 0
  return y2 > x2 ? 1 : -1;             // x < 0 < y
}

double Golden::to_double() const {
  return static_cast<double>(a_) + static_cast<double>(b_) * (1.0 + std::sqrt(5.0)) / 2.0;
}

std::ostream& operator<<(std::ostream& os, Golden x) {
  if (x.phi_part() == 0) return os << x.rational_part();
  return os << x.rational_part() << (x.phi_part() < 0 ? "-" : "+") << std::llabs(x.phi_part()) << "phi";
}

std::size_t element_cap_from_env() {
  if (const char* env = std::getenv("COXFACES_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw ContractViolation("COXFACES_CAP must be a positive integer, got '" + std::string(env) + "'");
  }
  return kDefaultElementCap;
}

namespace {

std::atomic<std::uint32_t> g_next_system_id{1};

struct TypeData {
  std::string id;
  int rank = 0;
  std::vector<std::vector<int>> m;
  std::vector<bool> long_root;  // only consulted for m = 4, 6
  int dihedral_m = 0;           // > 0 selects the combinatorial dihedral model
};

TypeData make_path(std::string id, int rank) {
  TypeData t;
  t.id = std::move(id);
  t.rank = rank;
  t.m.assign(rank, std::vector<int>(rank, 2));
  for (int i = 0; i < rank; ++i) t.m[i][i] = 1;
  for (int i = 0; i + 1 < rank; ++i) t.m[i][i + 1] = t.m[i + 1][i] = 3;
  t.long_root.assign(rank, true);
  return t;
}

void set_edge(TypeData& t, int a, int b, int m) { t.m[a][b] = t.m[b][a] = m; }

TypeData parse_type(std::string_view raw) {
  std::string s(raw);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  const std::string id = s;
  std::smatch match;
  static const std::regex dihedral(R"(^I2\((\d+)\)$)");
  static const std::regex letter(R"(^([ABDEFGH])(\d+)$)");
  if (std::regex_match(s, match, dihedral)) {
    const long m = std::stol(match[1]);
    if (m < 2 || m > 8000) throw UnsupportedType("I2(m) needs 2 <= m <= 8000, got '" + id + "'");
    TypeData t = make_path(id, 2);
    set_edge(t, 0, 1, static_cast<int>(m));
    switch (m) {
      case 4: t.long_root = {true, false}; break;
      case 6: t.long_root = {false, true}; break;
      case 2: case 3: case 5: break;
      default: t.dihedral_m = static_cast<int>(m);
    }
    return t;
  }
  if (!std::regex_match(s, match, letter)) throw UnsupportedType("unsupported Coxeter type '" + id + "'");
  const char family = match[1].str()[0];
  const int n = std::stoi(match[2]);
  auto need = [&](bool ok) {
    if (!ok) throw UnsupportedType("unsupported Coxeter type '" + id + "'");
  };
  need(n >= 1 && n <= kMaxRank);
  switch (family) {
    case 'A':
      return make_path(id, n);
    case 'B': {
      need(n >= 2);
      TypeData t = make_path(id, n);
      set_edge(t, n - 2, n - 1, 4);
      t.long_root.back() = false;
      return t;
    }
    case 'D': {
      need(n >= 4);
      TypeData t = make_path(id, n);
      set_edge(t, n - 2, n - 1, 2);
      set_edge(t, n - 3, n - 1, 3);
      return t;
    }
    case 'E': {
      need(n >= 6 && n <= 8);
      TypeData t = make_path(id, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) t.m[i][j] = 2;
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      set_edge(t, 0, 2, 3);
      for (int i = 2; i + 1 < n; ++i) set_edge(t, i, i + 1, 3);
      set_edge(t, 1, 3, 3);
      return t;
    }
    case 'F': {
      need(n == 4);
      TypeData t = make_path(id, 4);
      set_edge(t, 1, 2, 4);
      t.long_root = {true, true, false, false};
      return t;
    }
    case 'G': {
      need(n == 2);
      TypeData t = make_path(id, 2);
      set_edge(t, 0, 1, 6);
      t.long_root = {false, true};
      return t;
    }
    case 'H': {
      need(n == 3 || n == 4);
      TypeData t = make_path(id, n);
      set_edge(t, 0, 1, 5);
      return t;
    }
    default:
      break;
  }
  throw UnsupportedType("unsupported Coxeter type '" + id + "'");
}

// <alpha_t, alpha_s^vee>
Golden cartan_entry(const TypeData& t, int row, int col) {
  if (row == col) return 2;
  switch (t.m[row][col]) {
    case 2: return 0;
    case 3: return -1;
    case 4: return (t.long_root[row] && !t.long_root[col]) ? -2 : -1;
    case 5: return -Golden::phi();
    case 6: return (t.long_root[row] && !t.long_root[col]) ? -3 : -1;
    default: break;
  }
  throw UnsupportedRing("no exact root coordinates for m = " + std::to_string(t.m[row][col]) + " in " + t.id);
}

using RootVec = std::vector<Golden>;

struct RootVecLess {
  bool operator()(const RootVec& a, const RootVec& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].rational_part() != b[i].rational_part()) return a[i].rational_part() < b[i].rational_part();
      if (a[i].phi_part() != b[i].phi_part()) return a[i].phi_part() < b[i].phi_part();
    }
    return false;
  }
};

bool all_nonnegative(const RootVec& v) {
  return std::all_of(v.begin(), v.end(), [](Golden x) { return x.sign() >= 0; });
}

}  // namespace

CoxeterSystem build_coxeter_system(std::string_view type_id) {
  const TypeData data = parse_type(type_id);
  CoxeterSystem sys;
  sys.type_id_ = data.id;
  sys.rank_ = data.rank;
  sys.coxeter_matrix_ = data.m;
  sys.id_ = g_next_system_id.fetch_add(1);
  const int n = data.rank;

  if (data.dihedral_m > 0) {
    // Lines at angles k*pi/m, k = 0..m-1; alpha_1 is k = 0 and alpha_2 is k = m-1.
    // Index layout keeps simple roots first: k=0 -> 0, k=m-1 -> 1, else k -> k+1.
    const int m = data.dihedral_m;
    sys.ring_ = CoefficientRing::kCombinatorial;
    sys.num_roots_ = m;
    auto index_of = [m](int k) { return k == 0 ? 0 : (k == m - 1 ? 1 : k + 1); };
    auto angle_of = [m](int idx) { return idx == 0 ? 0 : (idx == 1 ? m - 1 : idx - 1); };
    sys.simple_action_.assign(2, std::vector<std::int16_t>(m));
    for (int idx = 0; idx < m; ++idx) {
      const int k = angle_of(idx);
      const SignedRoot r1 = k == 0 ? SignedRoot(0, true) : SignedRoot(index_of(m - k), false);
      const SignedRoot r2 = k == m - 1 ? SignedRoot(1, true) : SignedRoot(index_of(m - 2 - k), false);
      sys.simple_action_[0][idx] = r1.code();
      sys.simple_action_[1][idx] = r2.code();
    }
    sys.support_.assign(m, 3U);
    sys.support_[0] = 1U;
    sys.support_[1] = 2U;
    // Symmetric normalization has a unique middle root only for odd m; the
    // lower middle line is used for even m.
    sys.highest_root_ = index_of((m - 1) / 2);
    sys.finish_construction();
    return sys;
  }

  std::vector<std::vector<Golden>> cartan(n, std::vector<Golden>(n));
  bool golden = false;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      cartan[r][c] = cartan_entry(data, r, c);
      golden = golden || cartan[r][c].phi_part() != 0;
    }
  sys.ring_ = golden ? CoefficientRing::kGolden : CoefficientRing::kRational;

  // Close the simple roots under the simple reflections.
  std::map<RootVec, int, RootVecLess> index;
  std::vector<RootVec>& roots = sys.roots_;
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    RootVec v(n, Golden(0));
    v[s] = 1;
    index.emplace(v, s);
    roots.push_back(v);
    queue.push_back(s);
  }
  auto reflect = [&](int s, const RootVec& v) {
    Golden pairing = 0;
    for (int t = 0; t < n; ++t) pairing += v[t] * cartan[t][s];
    RootVec out = v;
    out[s] -= pairing;
    return out;
  };
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (int s = 0; s < n; ++s) {
      if (cur == s) continue;
      RootVec image = reflect(s, roots[cur]);
      if (!all_nonnegative(image)) throw InternalInvariant("simple reflection produced a mixed-sign root");
      if (index.find(image) != index.end()) continue;
      if (roots.size() >= 8000) throw InternalInvariant("root closure does not terminate; type is not finite");
      index.emplace(image, static_cast<int>(roots.size()));
      queue.push_back(static_cast<int>(roots.size()));
      roots.push_back(std::move(image));
    }
  }
  const int num = static_cast<int>(roots.size());
  sys.num_roots_ = num;
  sys.simple_action_.assign(n, std::vector<std::int16_t>(num));
  for (int s = 0; s < n; ++s) {
    for (int i = 0; i < num; ++i) {
      if (i == s) {
        sys.simple_action_[s][i] = SignedRoot(s, true).code();
        continue;
      }
      auto it = index.find(reflect(s, roots[i]));
      if (it == index.end()) throw InternalInvariant("root system not closed under a simple reflection");
      sys.simple_action_[s][i] = SignedRoot(it->second, false).code();
    }
  }
  sys.support_.assign(num, 0U);
  for (int i = 0; i < num; ++i)
    for (int s = 0; s < n; ++s)
      if (!roots[i][s].is_zero()) sys.support_[i] |= 1U << s;

  // Highest root: dominates every positive root coefficientwise.
  sys.highest_root_ = -1;
  for (int i = 0; i < num && sys.highest_root_ < 0; ++i) {
    bool top = true;
    for (int j = 0; j < num && top; ++j)
      for (int s = 0; s < n && top; ++s) top = (roots[i][s] - roots[j][s]).sign() >= 0;
    if (top) sys.highest_root_ = i;
  }
  if (sys.highest_root_ < 0) throw InternalInvariant("no highest root in " + sys.type_id_);

  // Rank-2 cones: beta_k = a beta_i + b beta_j with a, b > 0, solved by 2x2 minors.
  sys.between_.assign(num, {});
  for (int i = 0; i < num; ++i) {
    sys.between_[i].assign(num, {});
    for (int j = i + 1; j < num; ++j) {
      const RootVec& bi = roots[i];
      const RootVec& bj = roots[j];
      int p = -1, q = -1;
      Golden det = 0;
      for (int x = 0; x < n && p < 0; ++x)
        for (int y = x + 1; y < n; ++y) {
          const Golden d = bi[x] * bj[y] - bi[y] * bj[x];
          if (!d.is_zero()) {
            p = x, q = y, det = d;
            break;
          }
        }
      if (p < 0) throw InternalInvariant("two distinct positive roots are parallel");
      const int det_sign = det.sign();
      for (int k = 0; k < num; ++k) {
        if (k == i || k == j) continue;
        const RootVec& bk = roots[k];
        const Golden num_a = bk[p] * bj[q] - bk[q] * bj[p];
        const Golden num_b = bi[p] * bk[q] - bi[q] * bk[p];
        if (num_a.sign() * det_sign <= 0 || num_b.sign() * det_sign <= 0) continue;
        bool in_plane = true;
        for (int r = 0; r < n && in_plane; ++r) in_plane = det * bk[r] == num_a * bi[r] + num_b * bj[r];
        if (in_plane) sys.between_[i][j].push_back(static_cast<std::int16_t>(k));
      }
    }
  }
  sys.finish_construction();
  return sys;
}

}  // namespace coxfaces
