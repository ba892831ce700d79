#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "coxfaces/face_systems.hpp"
#include "coxfaces/sortable.hpp"
#include "coxfaces/subword.hpp"
#include "coxfaces/type_a.hpp"
#include "coxfaces/verifier.hpp"

namespace coxfaces {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// {"Q": [...], "vertices": [[positions]], "edges": [[i,j]]}, all 1-based except vertex ids.
json flip_graph_json(const FlipGraph& g);
json cambrian_json(const CoxeterSystem& sys, const CambrianLattice& lattice);

json face_system_json(const FaceSystem& fs);
/// Accepts {"vertices": count or [labels], "edges": [[u,v]], "faces": [{"name", "vertices"}]}.
FaceSystem face_system_from_json(const json& j);

std::string to_dot(const Graph& g, const std::vector<std::string>& labels, const std::string& name);

json triangulation_json(const type_a::Triangulation& t);
json polygon_json(const type_a::LabeledPolygon& p);

json counterexample_json(const FaceSystem& fs, const Counterexample& cx);
Counterexample counterexample_from_json(const json& j);

/// What to build and check. "target" is perm | assoc | typea | graph.
struct RunConfig {
  std::string target;
  std::string type_id;
  std::vector<int> coxeter;  ///< 0-based order (assoc)
  VerifyMode mode = VerifyMode::kBoth;
  int n = 0;                 ///< typea
  int choice = 1;            ///< typea
  json graph;                ///< graph target
  int jobs = 1;
  std::size_t cap = kDefaultElementCap;
  int transport_limit = 1000;

  json to_json() const;
  static RunConfig from_json(const json& j);
};

SystemVerification run_verification(const RunConfig& config);

json report_json(const SystemVerification& result, const RunConfig& config, bool deterministic);

struct ReplayResult {
  int counterexamples = 0;
  int reproduced = 0;
  std::vector<std::string> lines;
  bool ok() const { return reproduced == counterexamples; }
};

/// Rebuilds the system named in a report and re-checks every itemized counterexample.
ReplayResult replay_report(const json& report);

}  // namespace coxfaces
