#include "coxfaces/face_systems.hpp"

#include <algorithm>
#include <map>

#include "coxfaces/errors.hpp"
#include "coxfaces/type_a.hpp"

namespace coxfaces {

std::string element_label(const CoxeterSystem& sys, const GroupElement& w) {
  return w.is_identity() ? "e" : format_word(sys.reduced_word(w));
}

std::string subword_label(const VertexSubword& v) {
  std::string out = "{";
  for (std::size_t k = 0; k < v.positions.size(); ++k) out += (k ? "," : "") + std::to_string(v.positions[k] + 1);
  return out + "}";
}

PermFaceSystem perm_face_system(const CoxeterSystem& sys, std::size_t cap) {
  PermFaceSystem out;
  out.elements = sys.enumerate_elements(cap);
  const int count = static_cast<int>(out.elements.size());
  for (int v = 0; v < count; ++v) out.index.emplace(sys.key(out.elements[v]), v);
  std::vector<std::vector<int>> adj(count);
  for (int v = 0; v < count; ++v)
    for (int s = 0; s < sys.rank(); ++s) adj[v].push_back(out.index.at(sys.key(sys.right_multiply(out.elements[v], s))));
  out.faces.description = "permutahedron of " + sys.type_id();
  out.faces.graph = Graph(std::move(adj));
  for (const auto& w : out.elements) out.faces.labels.push_back(element_label(sys, w));

  for (int s = 0; s < sys.rank(); ++s) {
    const ParabolicSet j = ParabolicSet::all_but(s, sys.rank());
    std::map<int, std::vector<int>> cosets;  // representative id -> members
    for (int v = 0; v < count; ++v)
      cosets[out.index.at(sys.key(sys.min_coset_representative(out.elements[v], j)))].push_back(v);
    for (auto& [rep, members] : cosets) {
      Face f;
      f.name = "[" + out.faces.labels[rep] + "]W<" + std::to_string(s + 1) + ">";
      f.vertices = std::move(members);
      out.faces.faces.push_back(std::move(f));
      out.face_simple.push_back(s);
      out.face_representative.push_back(rep);
    }
  }
  return out;
}

NormalizationMapTable perm_normalization_map(const CoxeterSystem& sys, const PermFaceSystem& perm, int face) {
  if (face < 0 || face >= static_cast<int>(perm.faces.faces.size())) throw ContractViolation("face index out of range");
  const ParabolicSet j = ParabolicSet::all_but(perm.face_simple[face], sys.rank());
  const GroupElement& rep = perm.elements[perm.face_representative[face]];
  const GroupElement rep_inv = sys.inverse(rep);
  NormalizationMapTable table;
  table.face = face;
  table.map.reserve(perm.elements.size());
  for (const auto& u : perm.elements) {
    const GroupElement image = sys.multiply(rep, sys.parabolic_component(sys.multiply(rep_inv, u), j));
    table.map.push_back(perm.index.at(sys.key(image)));
  }
  return table;
}

CambrianFaceSystem cambrian_face_system(const CoxeterSystem& sys, const CoxeterElementOrder& c) {
  CambrianFaceSystem out;
  out.lattice = enumerate_sortables(sys, c);
  const int s = c.front();
  const ParabolicSet j = ParabolicSet::all_but(s, sys.rank());
  out.faces.description = "Cambrian lattice of " + sys.type_id() + ", c = " + format_word(c.word());
  out.faces.graph = Graph(out.lattice.adjacency());
  Face f;
  f.name = "Sort(W<" + std::to_string(s + 1) + ">)";
  for (int v = 0; v < out.lattice.size(); ++v) {
    out.faces.labels.push_back(element_label(sys, out.lattice.elements[v]));
    if (sys.in_parabolic(out.lattice.elements[v], j)) f.vertices.push_back(v);
  }
  out.faces.faces.push_back(std::move(f));
  return out;
}

NormalizationMapTable cambrian_normalization_map(const CoxeterSystem& sys, const CambrianFaceSystem& cambrian) {
  const int s = cambrian.lattice.c.front();
  NormalizationMapTable table;
  table.face = 0;
  for (const auto& u : cambrian.lattice.elements) {
    const auto image = cambrian.lattice.find(sys, proj_sortable(sys, u, s, cambrian.lattice.c));
    table.map.push_back(image ? *image : -1);
  }
  return table;
}

AssocFaceSystem assoc_face_system(const CoxeterSystem& sys, const CoxeterElementOrder& c) {
  AssocFaceSystem out;
  out.flips = flip_graph(sys, build_Q(sys, c));
  out.faces.description = "subword complex of " + sys.type_id() + ", c = " + format_word(c.word());
  out.faces.graph = Graph(out.flips.adjacency);
  for (const auto& v : out.flips.vertices) out.faces.labels.push_back(subword_label(v));
  for (int p = 0; p < out.flips.q.size(); ++p) {
    Face f;
    f.name = "letter " + std::to_string(p + 1);
    f.vertices = out.flips.letter_faces[p];
    out.faces.faces.push_back(std::move(f));
  }
  return out;
}

std::optional<VerifyMode> verify_mode_from_string(const std::string& text) {
  if (text == "axioms") return VerifyMode::kAxioms;
  if (text == "geodesics") return VerifyMode::kGeodesics;
  if (text == "both") return VerifyMode::kBoth;
  return std::nullopt;
}

std::string to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::kAxioms: return "axioms";
    case VerifyMode::kGeodesics: return "geodesics";
    case VerifyMode::kBoth: return "both";
  }
  return "unknown";
}

bool SystemVerification::pass() const {
  if (!problems.empty()) return false;
  for (const auto& section : sections)
    if (!section.report.pass()) return false;
  return true;
}

std::size_t SystemVerification::violations() const {
  std::size_t total = 0;
  for (const auto& section : sections) total += section.report.stats.violations;
  return total;
}

namespace {

bool wants_axioms(VerifyMode mode) { return mode != VerifyMode::kGeodesics; }
bool wants_geodesics(VerifyMode mode) { return mode != VerifyMode::kAxioms; }

// Records pass flags and checks the axioms-imply-geodesics cross-check.
void finish(SystemVerification& out) {
  for (const auto& section : out.sections) {
    auto& flag = section.check == "axioms" ? out.axioms_pass : out.geodesics_pass;
    flag = flag.value_or(true) && section.report.pass();
  }
  if (out.axioms_pass.value_or(false) && out.geodesics_pass && !*out.geodesics_pass)
    out.problems.push_back("normalization maps exist for every facet but a geodesic leaves a face");
}

Section make_section(std::string name, std::string check, std::shared_ptr<const FaceSystem> system,
                     VerificationReport report) {
  Section s;
  s.name = std::move(name);
  s.check = std::move(check);
  s.system = std::move(system);
  s.report = std::move(report);
  return s;
}

VerificationReport check_all_faces(const FaceSystem& fs, const std::vector<NormalizationMapTable>& maps) {
  VerificationReport total;
  for (const auto& phi : maps) total.merge(verify_normalization_map(fs, phi.face, phi));
  return total;
}

}  // namespace

SystemVerification verify_perm(const CoxeterSystem& sys, VerifyMode mode, const VerifyOptions& options,
                               std::size_t cap) {
  auto perm = std::make_shared<PermFaceSystem>(perm_face_system(sys, cap));
  std::shared_ptr<const FaceSystem> fs(perm, &perm->faces);
  SystemVerification out;
  out.target = "perm";
  out.description = fs->description;
  out.vertices = fs->graph.size();
  out.edges = fs->graph.edge_count();
  out.faces = fs->faces.size();
  if (wants_axioms(mode)) {
    std::vector<NormalizationMapTable> maps;
    for (int f = 0; f < static_cast<int>(fs->faces.size()); ++f) maps.push_back(perm_normalization_map(sys, *perm, f));
    out.sections.push_back(make_section("facets", "axioms", fs, check_all_faces(*fs, maps)));
  }
  if (wants_geodesics(mode))
    out.sections.push_back(make_section("facets", "geodesics", fs, verify_in_your_face(*fs, options)));
  finish(out);
  return out;
}

std::vector<NormalizationMapTable> transported_letter_maps(const CoxeterSystem& sys, const CoxeterElementOrder& c,
                                                           const AssocFaceSystem& assoc,
                                                           std::vector<std::string>& problems) {
  const int n = sys.rank();
  const int count = assoc.faces.graph.size();
  const int len = assoc.flips.q.size();

  // For each rotation k of c: flip graph of Q(c_k), Cambrian data, and an
  // isomorphism flip -> Cambrian sending letter-face 0 to Sort(W<s>).
  struct Rotated {
    FlipGraph flips;
    CambrianFaceSystem cambrian;
    NormalizationMapTable phi;
    std::vector<int> iso;      // flip vertex -> lattice vertex
    std::vector<int> iso_inv;  // lattice vertex -> flip vertex
  };
  std::vector<Rotated> rotated(n);
  CoxeterElementOrder ck = c;
  for (int k = 0; k < n; ++k, ck = ck.rotated()) {
    Rotated& r = rotated[k];
    r.flips = k == 0 ? assoc.flips : flip_graph(sys, build_Q(sys, ck));
    r.cambrian = cambrian_face_system(sys, ck);
    r.phi = cambrian_normalization_map(sys, r.cambrian);
    const Graph flip_graph_k(r.flips.adjacency);
    IsomorphismOptions iso_options;
    iso_options.colors1.assign(count, 0);
    iso_options.colors2.assign(count, 0);
    for (int v : r.flips.letter_faces[0]) iso_options.colors1[v] = 1;
    for (int v : r.cambrian.faces.faces[0].vertices) iso_options.colors2[v] = 1;
    if (r.cambrian.lattice.size() != count || r.flips.size() != count) {
      problems.push_back("vertex counts of flip graph and Cambrian lattice differ for c = " + format_word(ck.word()));
      return {};
    }
    auto iso = graphs_isomorphic(flip_graph_k, r.cambrian.faces.graph, iso_options);
    if (!iso) {
      problems.push_back("no face-preserving isomorphism between flip graph and Cambrian graph for c = " +
                         format_word(ck.word()));
      return {};
    }
    r.iso = std::move(*iso);
    r.iso_inv.assign(count, -1);
    for (int v = 0; v < count; ++v) r.iso_inv[r.iso[v]] = v;
  }

  // origin_position[p]: where the letter that started at position p now sits.
  std::vector<int> origin_position(len);
  for (int p = 0; p < len; ++p) origin_position[p] = p;
  std::vector<VertexSubword> current = assoc.flips.vertices;
  QWord q = assoc.flips.q;
  std::vector<NormalizationMapTable> maps(len);
  std::vector<bool> done(len, false);
  int remaining = len;
  const int max_rotations = 4 * len + 4 * n;
  for (int step = 0; remaining > 0 && step <= max_rotations; ++step) {
    const Rotated& r = rotated[step % n];
    if (!(r.flips.q == q)) {
      problems.push_back("rotation did not reach the canonical word for the rotated Coxeter element");
      return {};
    }
    for (int p = 0; p < len; ++p) {
      if (done[p] || origin_position[p] != 0) continue;
      // Vertex ids of flip(Q_k) for each original vertex, and back.
      std::vector<int> here(count), back(count, -1);
      for (int v = 0; v < count; ++v) {
        here[v] = r.flips.find(current[v]);
        if (here[v] < 0) {
          problems.push_back("rotated vertex-subword is not a vertex of the rotated complex");
          return {};
        }
        back[here[v]] = v;
      }
      NormalizationMapTable& table = maps[p];
      table.face = p;
      table.map.resize(count);
      for (int v = 0; v < count; ++v) {
        const int image = r.phi.map[r.iso[here[v]]];
        table.map[v] = image < 0 ? -1 : back[r.iso_inv[image]];
      }
      done[p] = true;
      --remaining;
    }
    const RotationMap rotation = rotation_map(sys, q);
    for (auto& v : current) v = apply_rotation(rotation, v);
    for (int& pos : origin_position) pos = rotation.position_map[pos];
    q = rotation.target;
  }
  if (remaining > 0) {
    problems.push_back("some letters never reached the front under rotation");
    return {};
  }
  return maps;
}

SystemVerification verify_assoc(const CoxeterSystem& sys, const CoxeterElementOrder& c, VerifyMode mode,
                                const AssocOptions& options) {
  SystemVerification out;
  out.target = "assoc";
  auto assoc = std::make_shared<AssocFaceSystem>(assoc_face_system(sys, c));
  std::shared_ptr<const FaceSystem> fs(assoc, &assoc->faces);
  out.description = fs->description;
  out.vertices = fs->graph.size();
  out.edges = fs->graph.edge_count();
  out.faces = fs->faces.size();

  if (wants_axioms(mode)) {
    // Cambrian side: for every rotation c' of c, u -> u_<s> on Sort(W, c').
    CoxeterElementOrder ck = c;
    for (int k = 0; k < sys.rank(); ++k, ck = ck.rotated()) {
      auto cambrian = std::make_shared<CambrianFaceSystem>(cambrian_face_system(sys, ck));
      if (cambrian->lattice.size() != out.vertices)
        out.problems.push_back("Cambrian lattice for c = " + format_word(ck.word()) +
                               " has a different size from the flip graph");
      const NormalizationMapTable phi = cambrian_normalization_map(sys, *cambrian);
      std::shared_ptr<const FaceSystem> cfs(cambrian, &cambrian->faces);
      out.sections.push_back(make_section("cambrian c=" + format_word(ck.word()), "axioms", cfs,
                                          verify_normalization_map(*cfs, 0, phi)));
    }
    if (out.vertices <= options.transport_limit) {
      const auto maps = transported_letter_maps(sys, c, *assoc, out.problems);
      if (!maps.empty()) out.sections.push_back(make_section("letter-faces", "axioms", fs, check_all_faces(*fs, maps)));
    }
  }
  if (wants_geodesics(mode))
    out.sections.push_back(make_section("letter-faces", "geodesics", fs, verify_in_your_face(*fs, options.verify)));
  finish(out);
  return out;
}

SystemVerification verify_typea(int n, VerifyMode mode, int choice, const VerifyOptions& options) {
  using namespace type_a;
  auto complex = std::make_shared<TriangulationComplex>(triangulation_complex(conventional_polygon(n)));
  std::shared_ptr<const FaceSystem> fs(complex, &complex->faces);
  SystemVerification out;
  out.target = "typea";
  out.description = fs->description;
  out.vertices = fs->graph.size();
  out.edges = fs->graph.edge_count();
  out.faces = fs->faces.size();
  if (wants_axioms(mode)) {
    std::map<Triangulation, int> index;
    for (int v = 0; v < out.vertices; ++v) index.emplace(complex->triangulations[v], v);
    std::vector<NormalizationMapTable> maps;
    for (int f = 0; f < static_cast<int>(complex->diagonals.size()); ++f) {
      NormalizationMapTable table;
      table.face = f;
      for (const auto& t : complex->triangulations) {
        auto it = index.find(project_onto_diagonal(t, complex->diagonals[f], n, choice));
        table.map.push_back(it == index.end() ? -1 : it->second);
      }
      maps.push_back(std::move(table));
    }
    out.sections.push_back(make_section("diagonal faces", "axioms", fs, check_all_faces(*fs, maps)));
  }
  if (wants_geodesics(mode))
    out.sections.push_back(make_section("diagonal faces", "geodesics", fs, verify_in_your_face(*fs, options)));
  finish(out);
  return out;
}

SystemVerification verify_graph(const FaceSystem& input, const VerifyOptions& options) {
  auto fs = std::make_shared<const FaceSystem>(input);
  SystemVerification out;
  out.target = "graph";
  out.description = fs->description;
  out.vertices = fs->graph.size();
  out.edges = fs->graph.edge_count();
  out.faces = fs->faces.size();
  out.sections.push_back(make_section("faces", "geodesics", fs, verify_in_your_face(*fs, options)));
  finish(out);
  return out;
}

}  // namespace coxfaces
