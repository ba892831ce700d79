#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxfaces/coxeter.hpp"
#include "coxfaces/sortable.hpp"
#include "coxfaces/subword.hpp"
#include "coxfaces/verifier.hpp"

namespace coxfaces {

/// Permutahedron: vertices W, edges w - ws, facets the left cosets w W_<s>.
struct PermFaceSystem {
  std::vector<GroupElement> elements;
  std::unordered_map<ElementKey, int, ElementKeyHash> index;
  FaceSystem faces;
  std::vector<int> face_simple;          ///< the omitted simple s of each facet
  std::vector<int> face_representative;  ///< vertex id of the minimal coset representative
};

PermFaceSystem perm_face_system(const CoxeterSystem& sys, std::size_t cap = kDefaultElementCap);

/// u -> w (w^{-1} u)_<s> for the facet w W_<s>.
NormalizationMapTable perm_normalization_map(const CoxeterSystem& sys, const PermFaceSystem& perm, int face);

/// Cambrian cover graph with the single face Sort(W_<s>, sc), s = c.front().
struct CambrianFaceSystem {
  CambrianLattice lattice;
  FaceSystem faces;
};

CambrianFaceSystem cambrian_face_system(const CoxeterSystem& sys, const CoxeterElementOrder& c);

/// u -> u_<s>, looked up in the lattice (-1 if the image is missing).
NormalizationMapTable cambrian_normalization_map(const CoxeterSystem& sys, const CambrianFaceSystem& cambrian);

/// Flip graph with one letter-face per position of Q.
struct AssocFaceSystem {
  FlipGraph flips;
  FaceSystem faces;
};

AssocFaceSystem assoc_face_system(const CoxeterSystem& sys, const CoxeterElementOrder& c);

std::string element_label(const CoxeterSystem& sys, const GroupElement& w);
std::string subword_label(const VertexSubword& v);

enum class VerifyMode { kAxioms, kGeodesics, kBoth };

std::optional<VerifyMode> verify_mode_from_string(const std::string& text);
std::string to_string(VerifyMode mode);

/// One checked (graph, faces) pair and what was run on it.
struct Section {
  std::string name;
  std::string check;  ///< "axioms" or "geodesics"
  std::shared_ptr<const FaceSystem> system;
  VerificationReport report;
};

struct SystemVerification {
  std::string target;  ///< "perm", "assoc", "typea" or "graph"
  std::string description;
  int vertices = 0;
  std::size_t edges = 0;
  std::size_t faces = 0;
  std::vector<Section> sections;
  std::vector<std::string> problems;  ///< internal inconsistencies, always fatal
  std::optional<bool> axioms_pass;
  std::optional<bool> geodesics_pass;

  bool pass() const;
  std::size_t violations() const;
};

struct AssocOptions {
  VerifyOptions verify;
  /// Also check every letter-face of the flip graph by transporting the
  /// Cambrian maps through rotations and graph isomorphisms (up to this size).
  int transport_limit = 1000;
};

SystemVerification verify_perm(const CoxeterSystem& sys, VerifyMode mode, const VerifyOptions& options = {},
                               std::size_t cap = kDefaultElementCap);
SystemVerification verify_assoc(const CoxeterSystem& sys, const CoxeterElementOrder& c, VerifyMode mode,
                                const AssocOptions& options = {});
/// Triangulations of the conventional (n+2)-gon, faces "contains d", maps via relabeling.
SystemVerification verify_typea(int n, VerifyMode mode, int choice = 1, const VerifyOptions& options = {});
/// Arbitrary face system; only geodesics can be checked.
SystemVerification verify_graph(const FaceSystem& fs, const VerifyOptions& options = {});

/// Letter-face maps on the flip graph of Q(c), obtained by rotating each
/// letter to the front and pulling back u -> u_<s> through an isomorphism
/// with the Cambrian cover graph. Empty on failure, with reasons in `problems`.
std::vector<NormalizationMapTable> transported_letter_maps(const CoxeterSystem& sys, const CoxeterElementOrder& c,
                                                           const AssocFaceSystem& assoc,
                                                           std::vector<std::string>& problems);

}  // namespace coxfaces
