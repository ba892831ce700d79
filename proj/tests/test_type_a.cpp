#include <doctest.h>

#include <map>

#include "coxfaces/errors.hpp"
#include "coxfaces/face_systems.hpp"
#include "coxfaces/type_a.hpp"
#include "support.hpp"

using namespace coxfaces;
using namespace coxfaces::type_a;

namespace {

CoxeterElementOrder order(std::initializer_list<int> letters_1based) {
  std::vector<int> letters;
  for (int s : letters_1based) letters.push_back(s - 1);
  return CoxeterElementOrder(letters, static_cast<int>(letters.size()));
}

Triangulation tri(std::initializer_list<Diagonal> ds) { return Triangulation(ds.begin(), ds.end()); }

// One representative order per distinct Coxeter element of S_n.
std::vector<CoxeterElementOrder> distinct_elements(int n) {
  std::map<Permutation, CoxeterElementOrder> seen;
  for (const auto& c : testing::all_orders(n - 1)) seen.emplace(permutation_of_word(c.letters(), n), c);
  std::vector<CoxeterElementOrder> out;
  for (const auto& [p, c] : seen) out.push_back(c);
  return out;
}

const Mark kBoth[] = {Mark::kUpper, Mark::kLower};

}  // namespace

TEST_CASE("cycle form examples") {
  auto cf = cycle_form(CoxeterElementOrder::linear(4), 5);
  CHECK(cf.lowers == std::vector<int>{2, 3, 4});
  CHECK(cf.uppers.empty());
  CHECK(cf.cycle == std::vector<int>{1, 2, 3, 4, 5});

  cf = cycle_form(order({6, 7, 8, 9, 1, 2, 3, 4, 5}), 10);
  CHECK(cf.lowers == std::vector<int>{2, 3, 4, 5, 7, 8, 9});
  CHECK(cf.uppers == std::vector<int>{6});

  cf = cycle_form(order({1}), 2);
  CHECK(cf.lowers.empty());
  CHECK(cf.uppers.empty());

  CHECK_THROWS_AS(cycle_form(order({1, 2}), 4), ContractViolation);
}

TEST_CASE("cycle forms reproduce c") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& c : testing::all_orders(n - 1)) {
      const CycleForm cf = cycle_form(c, n);
      std::vector<int> both = cf.lowers;
      both.insert(both.end(), cf.uppers.begin(), cf.uppers.end());
      std::sort(both.begin(), both.end());
      std::vector<int> middle(std::max(0, n - 2));
      std::iota(middle.begin(), middle.end(), 2);
      CHECK(both == middle);
      // the cycle (1, lowers, n, uppers descending) as a permutation equals c
      Permutation p(n);
      for (int k = 0; k < n; ++k) p[cf.cycle[k] - 1] = cf.cycle[(k + 1) % n];
      CHECK(p == testing::perm_of_word(c.letters(), n));
    }
}

TEST_CASE("polygon labeling examples") {
  const LabeledPolygon p = polygon_labeling(cycle_form(order({1, 2}), 3), Mark::kUpper, Mark::kLower);
  CHECK(p.mark(1) == Mark::kUpper);
  CHECK(p.mark(2) == Mark::kLower);
  CHECK(p.mark(3) == Mark::kLower);
  CHECK(p.boundary == std::vector<int>{0, 2, 3, 4, 1});
  const auto d = interior_diagonals(p);
  CHECK(std::set<Diagonal>(d.begin(), d.end()) == std::set<Diagonal>{{0, 3}, {0, 4}, {1, 2}, {1, 3}, {2, 4}});

  for (int n = 3; n <= 8; ++n)
    for (int i = 1; i < n; ++i) {
      const LabeledPolygon ci = c_i_labeling(n, i);
      for (int x = 1; x <= n; ++x) CHECK((ci.mark(x) == Mark::kUpper) == (x == i));
    }

  const LabeledPolygon square = polygon_labeling(cycle_form(order({1}), 2), Mark::kLower, Mark::kUpper);
  CHECK(square.boundary == std::vector<int>{0, 1, 3, 2});
  CHECK(interior_diagonals(square).size() == 2);
}

TEST_CASE("triangulation examples") {
  const LabeledPolygon p = polygon_labeling(cycle_form(order({1, 2}), 3), Mark::kUpper, Mark::kLower);
  CHECK(triangulation_of({1, 2, 3}, p) == tri({{1, 2}, {1, 3}}));
  CHECK(triangulation_of({2, 3, 1}, p) == tri({{0, 3}, {0, 4}}));

  const CoxeterElementOrder c = order({6, 7, 8, 9, 1, 2, 3, 4, 5});
  const LabeledPolygon big = polygon_labeling(cycle_form(c, 10), Mark::kLower, Mark::kLower);
  const Permutation w = {3, 7, 5, 8, 4, 9, 6, 2, 1, 10};
  const Triangulation t = triangulation_of(w, big);
  CHECK(t.size() == 9);
  CHECK(is_triangulation(big, t));

  CHECK_THROWS_AS(triangulation_of({1, 1, 3}, p), ContractViolation);
}

TEST_CASE("crossing and boundary predicates") {
  const LabeledPolygon p = conventional_polygon(4);
  CHECK(is_boundary_edge(p, {0, 1}));
  CHECK(is_boundary_edge(p, {0, 5}));
  CHECK(is_interior(p, {1, 3}));
  CHECK(crosses(p, {0, 2}, {1, 3}));
  CHECK_FALSE(crosses(p, {0, 2}, {2, 4}));
  CHECK_FALSE(crosses(p, {0, 3}, {1, 2}));
  CHECK(all_triangulations(p).size() == testing::catalan(4));
}

TEST_CASE("T_c is a bijection from c-sortable elements onto triangulations") {
  for (int n = 2; n <= 7; ++n) {
    const CoxeterSystem sys = build_coxeter_system("A" + std::to_string(n - 1));
    for (const auto& c : distinct_elements(n)) {
      const CycleForm cf = cycle_form(c, n);
      const auto sortables = enumerate_sortables(sys, c).elements;
      for (Mark m1 : kBoth)
        for (Mark mn : kBoth) {
          const LabeledPolygon p = polygon_labeling(cf, m1, mn);
          std::set<Triangulation> images;
          for (const auto& w : sortables) {
            const Permutation perm = to_permutation(sys, w);
            const Triangulation t = triangulation_of(perm, p);
            CHECK(is_triangulation(p, t));
            images.insert(t);
            const auto paths = paths_of(perm, p);
            CHECK(static_cast<int>(paths.size()) == n + 1);
            for (std::size_t k = 0; k < paths.size(); ++k) {
              CHECK(std::is_sorted(paths[k].begin(), paths[k].end()));
              CHECK(paths[k].front() == 0);
              CHECK(paths[k].back() == n + 1);
              if (k == 0) continue;
              std::vector<int> diff;
              std::set_symmetric_difference(paths[k - 1].begin(), paths[k - 1].end(), paths[k].begin(),
                                            paths[k].end(), std::back_inserter(diff));
              CHECK(diff.size() == 1);
            }
          }
          CHECK(images.size() == testing::catalan(n));
          CHECK(images.size() == sortables.size());
        }
    }
  }
}

TEST_CASE("diagonal projection examples") {
  const LabeledPolygon p = c_i_labeling(3, 1);
  CHECK(project_diagonal({0, 3}, 1, p) == std::set<Diagonal>{{1, 3}});
  CHECK(project_diagonal({0, 4}, 1, p).empty());
  CHECK(project_diagonal({2, 4}, 1, p) == std::set<Diagonal>{{2, 4}});

  CHECK(project_triangulation(tri({{0, 3}, {0, 4}}), 1, p) == tri({{1, 2}, {1, 3}}));
  CHECK(project_triangulation(tri({{1, 2}, {1, 3}}), 1, p) == tri({{1, 2}, {1, 3}}));

  CHECK(stt_project({0, 3}, 1, 1, p) == std::set<Diagonal>{{1, 3}});
  CHECK(stt_project({0, 3}, 1, 2, p).empty());
  CHECK(stt_project({2, 4}, 1, 1, p) == std::set<Diagonal>{{2, 4}});
}

TEST_CASE("the diagonal projection is a normalization map on triangulations") {
  for (int n = 3; n <= 7; ++n)
    for (int i = 1; i < n; ++i) {
      const LabeledPolygon p = c_i_labeling(n, i);
      const Diagonal f{i, i + 1};
      for (const auto& t : all_triangulations(p)) {
        const Triangulation image = project_triangulation(t, i, p);
        CHECK(is_triangulation(p, image));
        CHECK(image.count(f) == 1);
        CHECK(project_triangulation(image, i, p) == image);
        if (t.count(f)) CHECK(image == t);
      }
    }
  for (int n = 3; n <= 6; ++n)
    for (int choice : {1, 2}) {
      CAPTURE(n);
      CHECK(verify_typea(n, VerifyMode::kBoth, choice).pass());
    }
}

TEST_CASE("relabeling examples") {
  auto r = relabel_for_diagonal({0, 2}, 3, 1);
  CHECK(r.i == 1);
  CHECK(r.map == std::vector<int>{1, 0, 2, 3, 4});
  r = relabel_for_diagonal({0, 2}, 3, 2);
  CHECK(r.i == 2);
  CHECK(r.map == std::vector<int>{3, 4, 2, 0, 1});
  CHECK_THROWS_AS(relabel_for_diagonal({0, 1}, 3, 1), ContractViolation);

  for (int n = 3; n <= 8; ++n) {
    const LabeledPolygon conventional = conventional_polygon(n);
    for (const Diagonal& f : interior_diagonals(conventional))
      for (int choice : {1, 2}) {
        const Relabeling rl = relabel_for_diagonal(f, n, choice);
        CHECK(make_diagonal(rl.map[f.first], rl.map[f.second]) == Diagonal{rl.i, rl.i + 1});
        // adjacency on the boundary is carried to adjacency in the c_i polygon
        const LabeledPolygon target = c_i_labeling(n, rl.i);
        for (int x = 0; x < n + 2; ++x)
          CHECK(is_boundary_edge(target, make_diagonal(rl.map[x], rl.map[(x + 1) % (n + 2)])));
      }
  }
}

TEST_CASE("both relabeling choices give the same projection") {
  for (int n = 3; n <= 6; ++n) {
    const LabeledPolygon conventional = conventional_polygon(n);
    const auto all = all_triangulations(conventional);
    for (const Diagonal& f : interior_diagonals(conventional))
      for (const auto& t : all) CHECK(project_onto_diagonal(t, f, n, 1) == project_onto_diagonal(t, f, n, 2));
  }
}

TEST_CASE("parabolic projection agrees with the Coxeter-group component") {
  for (int n = 2; n <= 6; ++n) {
    const CoxeterSystem sys = build_coxeter_system("A" + std::to_string(n - 1));
    for (const auto& w : testing::all_perms(n)) {
      const GroupElement g = to_element(sys, w);
      CHECK(to_permutation(sys, g) == w);
      CHECK(g.length() == testing::inversions(w));
      for (int i = 1; i < n; ++i) {
        const Permutation u = parabolic_projection(w, i);
        CHECK(u == to_permutation(sys, sys.parabolic_component(g, ParabolicSet::all_but(i - 1, n - 1))));
        // the oracle's inversion pairs of u are those of w inside one block
        std::set<std::pair<int, int>> inside;
        for (auto [a, b] : testing::value_inversions(w))
          if ((b <= i) || (a > i)) inside.emplace(a, b);
        CHECK(testing::value_inversions(u) == inside);
      }
    }
  }
  CHECK(parabolic_projection({3, 7, 5, 8, 4, 9, 6, 2, 1, 10}, 6) == Permutation{3, 5, 4, 6, 2, 1, 7, 8, 9, 10});
}

TEST_CASE("projection theorem examples") {
  const auto big = check_projection_theorem(10, 6, {3, 7, 5, 8, 4, 9, 6, 2, 1, 10});
  CHECK(big.projected == Permutation{3, 5, 4, 6, 2, 1, 7, 8, 9, 10});
  CHECK(big.equal);
  CHECK(big.left == big.right);

  const auto small = check_projection_theorem(3, 1, {2, 3, 1}, Mark::kUpper, Mark::kLower);
  CHECK(small.projected == Permutation{1, 2, 3});
  CHECK(small.left == tri({{1, 2}, {1, 3}}));
  CHECK(small.right == tri({{1, 2}, {1, 3}}));
  CHECK(small.equal);

  for (int n = 2; n <= 8; ++n)
    for (int i = 1; i < n; ++i)
      for (Mark m1 : kBoth)
        for (Mark mn : kBoth) {
          const LabeledPolygon p = polygon_labeling(cycle_form(c_i(n, i), n), m1, mn);
          const bool holds = verify_projection_theorem(n, i, testing::identity_perm(n), m1, mn);
          if (theorem_applies(p, i)) CHECK(holds);
          else if (n >= 3) CHECK_FALSE(holds);
        }
}

TEST_CASE("projection theorem holds whenever i is Upper and i+1 is Lower") {
  for (int n = 2; n <= 6; ++n) {
    const auto perms = testing::all_perms(n);
    for (int i = 1; i < n; ++i)
      for (Mark m1 : kBoth)
        for (Mark mn : kBoth) {
          const LabeledPolygon p = polygon_labeling(cycle_form(c_i(n, i), n), m1, mn);
          bool all = true;
          for (const auto& w : perms) all = all && verify_projection_theorem(n, i, w, m1, mn);
          CAPTURE(n);
          CAPTURE(i);
          CHECK(all == theorem_applies(p, i));
        }
  }
}

TEST_CASE("n-1 Cambrian rotations act as a one-step polygon rotation") {
  for (int n = 3; n <= 5; ++n) {
    const CoxeterSystem sys = build_coxeter_system("A" + std::to_string(n - 1));
    const TriangulationComplex tc = triangulation_complex(conventional_polygon(n));
    for (const auto& c : distinct_elements(n)) {
      const AssocFaceSystem assoc = assoc_face_system(sys, c);
      std::vector<VertexSubword> current = assoc.flips.vertices;
      QWord q = assoc.flips.q;
      for (int k = 0; k < n - 1; ++k) {
        const RotationMap rm = rotation_map(sys, q);
        for (auto& v : current) v = apply_rotation(rm, v);
        q = rm.target;
      }
      REQUIRE(q == assoc.flips.q);
      // Any identification works: two of them differ by a dihedral symmetry, which
      // conjugates a one-step rotation to a one-step rotation.
      const auto to_tri = graphs_isomorphic(Graph(assoc.flips.adjacency), tc.faces.graph);
      REQUIRE(to_tri.has_value());
      std::vector<int> from_tri(tc.triangulations.size());
      for (std::size_t v = 0; v < to_tri->size(); ++v) from_tri[(*to_tri)[v]] = static_cast<int>(v);
      const int m = n + 2;
      bool found = false;
      for (int step : {1, m - 1}) {
        bool ok = true;
        for (std::size_t t = 0; ok && t < tc.triangulations.size(); ++t) {
          const int v = from_tri[t];
          const int image = assoc.flips.find(current[v]);
          if (image < 0) {
            ok = false;
            break;
          }
          Triangulation shifted;
          for (auto [a, b] : tc.triangulations[t]) shifted.insert(make_diagonal((a + step) % m, (b + step) % m));
          ok = tc.triangulations[(*to_tri)[image]] == shifted;
        }
        found = found || ok;
      }
      CAPTURE(n);
      CHECK(found);
    }
  }
}

TEST_CASE("parsing and formatting") {
  CHECK(parse_permutation("3,1,2", 3) == Permutation{3, 1, 2});
  CHECK_THROWS_AS(parse_permutation("3,1,1", 3), Error);
  CHECK_THROWS_AS(parse_permutation("1,2", 3), Error);
  CHECK(format_permutation({2, 1, 3}) == "2,1,3");
  CHECK(format_triangulation(tri({{0, 3}, {0, 4}})) == "{(0,3),(0,4)}");
  CHECK(to_string(Mark::kUpper) == "U");
  CHECK(parse_order("linear", 4).letters() == std::vector<int>{0, 1, 2});
  CHECK(c_i(5, 3).letters() == std::vector<int>{2, 3, 0, 1});
  CHECK(permutation_of_word({0, 1}, 3) == testing::perm_of_word({0, 1}, 3));
}
