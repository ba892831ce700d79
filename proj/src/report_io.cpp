#include "coxfaces/report_io.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <sstream>

#include "coxfaces/errors.hpp"

namespace coxfaces {

json flip_graph_json(const FlipGraph& g) {
  json q = json::array();
  for (int s : g.q.letters) q.push_back(s + 1);
  json vertices = json::array();
  for (const auto& v : g.vertices) {
    json positions = json::array();
    for (int p : v.positions) positions.push_back(p + 1);
    vertices.push_back(positions);
  }
  json edges = json::array();
  for (int u = 0; u < g.size(); ++u)
    for (int v : g.adjacency[u])
      if (u < v) edges.push_back({u, v});
  return {{"Q", q}, {"vertices", vertices}, {"edges", edges}};
}

json cambrian_json(const CoxeterSystem& sys, const CambrianLattice& lattice) {
  json c = json::array();
  for (int s : lattice.c.letters()) c.push_back(s + 1);
  json vertices = json::array();
  for (const auto& w : lattice.elements) vertices.push_back(format_word(sorting_word(sys, w, lattice.c).flat));
  json edges = json::array();
  for (const auto& e : lattice.edges) edges.push_back({e.upper, e.lower, e.simple + 1});
  return {{"c", c}, {"vertices", vertices}, {"edges", edges}};
}

json face_system_json(const FaceSystem& fs) {
  json out;
  out["description"] = fs.description;
  if (fs.labels.empty()) {
    out["vertices"] = fs.graph.size();
  } else {
    out["vertices"] = fs.labels;
  }
  json edges = json::array();
  for (auto [u, v] : fs.graph.edges()) edges.push_back({u, v});
  out["edges"] = edges;
  json faces = json::array();
  for (const Face& f : fs.faces) faces.push_back({{"name", f.name}, {"vertices", f.vertices}});
  out["faces"] = faces;
  return out;
}

FaceSystem face_system_from_json(const json& j) {
  try {
    FaceSystem fs;
    fs.description = j.value("description", std::string("graph"));
    int count = 0;
    if (j.at("vertices").is_number_integer()) {
      count = j.at("vertices").get<int>();
    } else {
      fs.labels = j.at("vertices").get<std::vector<std::string>>();
      count = static_cast<int>(fs.labels.size());
    }
    if (count < 0) throw ContractViolation("negative vertex count");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    fs.graph = Graph::from_edges(count, edges);
    int unnamed = 0;
    for (const auto& f : j.at("faces")) {
      Face face;
      face.name = f.value("name", "face " + std::to_string(unnamed++));
      face.vertices = f.at("vertices").get<std::vector<int>>();
      std::sort(face.vertices.begin(), face.vertices.end());
      face.vertices.erase(std::unique(face.vertices.begin(), face.vertices.end()), face.vertices.end());
      fs.faces.push_back(std::move(face));
    }
    return fs;
  } catch (const json::exception& e) {
    throw ContractViolation(std::string("malformed graph JSON: ") + e.what());
  }
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  for (int v = 0; v < g.size(); ++v) {
    out << "  " << v;
    if (v < static_cast<int>(labels.size())) out << " [label=\"" << labels[v] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

json triangulation_json(const type_a::Triangulation& t) {
  json out = json::array();
  for (const auto& d : t) out.push_back({d.first, d.second});
  return out;
}

json polygon_json(const type_a::LabeledPolygon& p) {
  json marks = json::object();
  for (int x = 1; x <= p.n; ++x) marks[std::to_string(x)] = type_a::to_string(p.marks[x]);
  return {{"n", p.n}, {"marks", marks}, {"boundary", p.boundary}};
}

json counterexample_json(const FaceSystem& fs, const Counterexample& cx) {
  json out;
  out["kind"] = to_string(cx.kind);
  out["face"] = cx.face;
  if (cx.face >= 0 && cx.face < static_cast<int>(fs.faces.size())) out["face_name"] = fs.faces[cx.face].name;
  out["from"] = cx.from;
  out["to"] = cx.to;
  out["from_label"] = fs.label(cx.from);
  out["to_label"] = cx.to >= 0 ? fs.label(cx.to) : std::string("-");
  if (cx.witness >= 0) {
    out["witness"] = cx.witness;
    out["witness_label"] = fs.label(cx.witness);
  }
  if (!cx.path.empty()) out["path"] = cx.path;
  return out;
}

Counterexample counterexample_from_json(const json& j) {
  Counterexample cx;
  const auto kind = violation_kind_from_string(j.at("kind").get<std::string>());
  if (!kind) throw ContractViolation("unknown counterexample kind");
  cx.kind = *kind;
  cx.face = j.at("face").get<int>();
  cx.from = j.at("from").get<int>();
  cx.to = j.at("to").get<int>();
  cx.witness = j.value("witness", -1);
  if (j.contains("path")) cx.path = j.at("path").get<std::vector<int>>();
  return cx;
}

json RunConfig::to_json() const {
  json out;
  out["target"] = target;
  out["mode"] = to_string(mode);
  if (target == "perm" || target == "assoc") out["type"] = type_id;
  if (target == "assoc") {
    json c = json::array();
    for (int s : coxeter) c.push_back(s + 1);
    out["coxeter"] = c;
  }
  if (target == "typea") {
    out["n"] = n;
    out["choice"] = choice;
  }
  if (target == "graph") out["graph"] = graph;
  return out;
}

RunConfig RunConfig::from_json(const json& j) {
  try {
    RunConfig config;
    config.target = j.at("target").get<std::string>();
    const auto mode = verify_mode_from_string(j.value("mode", std::string("both")));
    if (!mode) throw ContractViolation("unknown verification mode");
    config.mode = *mode;
    if (j.contains("type")) config.type_id = j.at("type").get<std::string>();
    if (j.contains("coxeter"))
      for (int s : j.at("coxeter").get<std::vector<int>>()) config.coxeter.push_back(s - 1);
    config.n = j.value("n", 0);
    config.choice = j.value("choice", 1);
    if (j.contains("graph")) config.graph = j.at("graph");
    return config;
  } catch (const json::exception& e) {
    throw ContractViolation(std::string("malformed run configuration: ") + e.what());
  }
}

SystemVerification run_verification(const RunConfig& config) {
  VerifyOptions options;
  options.jobs = config.jobs;
  if (config.target == "perm") {
    const CoxeterSystem sys = build_coxeter_system(config.type_id);
    return verify_perm(sys, config.mode, options, config.cap);
  }
  if (config.target == "assoc") {
    const CoxeterSystem sys = build_coxeter_system(config.type_id);
    const CoxeterElementOrder c = config.coxeter.empty() ? CoxeterElementOrder::linear(sys.rank())
                                                         : CoxeterElementOrder(config.coxeter, sys.rank());
    AssocOptions assoc_options;
    assoc_options.verify = options;
    assoc_options.transport_limit = config.transport_limit;
    return verify_assoc(sys, c, config.mode, assoc_options);
  }
  if (config.target == "typea") return verify_typea(config.n, config.mode, config.choice, options);
  if (config.target == "graph") return verify_graph(face_system_from_json(config.graph), options);
  throw ContractViolation("unknown target '" + config.target + "'");
}

namespace {

std::string status_string(std::optional<bool> flag) {
  if (!flag) return "skipped";
  return *flag ? "pass" : "fail";
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

}  // namespace

json report_json(const SystemVerification& result, const RunConfig& config, bool deterministic) {
  json out;
  out["schema"] = kSchemaVersion;
  out["config"] = config.to_json();
  out["system"] = {{"target", result.target},
                   {"description", result.description},
                   {"vertices", result.vertices},
                   {"edges", result.edges},
                   {"faces", result.faces}};
  out["status"] = result.pass() ? "pass" : "fail";
  out["axioms"] = status_string(result.axioms_pass);
  out["geodesics"] = status_string(result.geodesics_pass);
  out["violations"] = result.violations();
  out["problems"] = result.problems;
  json sections = json::array();
  for (const auto& section : result.sections) {
    json s;
    s["name"] = section.name;
    s["check"] = section.check;
    s["status"] = section.report.pass() ? "pass" : "fail";
    const auto& st = section.report.stats;
    s["stats"] = {{"faces_checked", st.faces_checked},
                  {"pairs_checked", st.pairs_checked},
                  {"edges_checked", st.edges_checked},
                  {"violations", st.violations}};
    if (!deterministic) s["stats"]["wall_seconds"] = st.wall_seconds;
    json list = json::array();
    for (const auto& cx : section.report.counterexamples) list.push_back(counterexample_json(*section.system, cx));
    s["counterexamples"] = list;
    sections.push_back(s);
  }
  out["sections"] = sections;
  if (!deterministic) out["timestamp"] = utc_timestamp();
  return out;
}

ReplayResult replay_report(const json& report) {
  ReplayResult out;
  if (!report.is_object() || report.value("schema", 0) != kSchemaVersion)
    throw ContractViolation("not a schema-" + std::to_string(kSchemaVersion) + " report");
  const RunConfig config = RunConfig::from_json(report.at("config"));
  const SystemVerification fresh = run_verification(config);
  for (const auto& section : report.at("sections")) {
    const std::string name = section.at("name").get<std::string>();
    const std::string check = section.at("check").get<std::string>();
    const Section* match = nullptr;
    for (const auto& s : fresh.sections)
      if (s.name == name && s.check == check) match = &s;
    for (const auto& item : section.at("counterexamples")) {
      ++out.counterexamples;
      const Counterexample cx = counterexample_from_json(item);
      bool reproduced = false;
      if (match) {
        const auto& list = match->report.counterexamples;
        const bool listed = std::find_if(list.begin(), list.end(), [&](const Counterexample& other) {
                              return other.kind == cx.kind && other.face == cx.face && other.from == cx.from &&
                                     other.to == cx.to;
                            }) != list.end();
        reproduced = cx.kind == ViolationKind::kGeodesicLeavesFace ? replay_counterexample(*match->system, cx) : listed;
      }
      if (reproduced) ++out.reproduced;
      std::ostringstream line;
      line << (reproduced ? "reproduced" : "NOT reproduced") << ": " << name << " " << to_string(cx.kind)
           << " face " << cx.face << " (" << cx.from << ", " << cx.to << ")";
      if (cx.witness >= 0) line << " witness " << cx.witness;
      if (!cx.path.empty()) {
        line << " path";
        for (int v : cx.path) line << ' ' << v;
      }
      out.lines.push_back(line.str());
    }
  }
  return out;
}

}  // namespace coxfaces
