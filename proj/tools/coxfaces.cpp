// coxfaces: enumerate sortable elements and subword complexes, verify the
// in-your-face property, export graphs, and work with type A triangulations.
//
// Exit codes: 0 success, 1 property violation, 2 usage or configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "coxfaces/errors.hpp"
#include "coxfaces/face_systems.hpp"
#include "coxfaces/report_io.hpp"
#include "coxfaces/type_a.hpp"

using namespace coxfaces;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string type_id = "A3";
  std::string coxeter = "linear";
  std::string output;
  int jobs = 1;
};

void add_system_options(CLI::App* cmd, Common& common) {
  cmd->add_option("--type", common.type_id, "Coxeter type, e.g. A3, B4, D4, E8, H3, I2(7)");
  cmd->add_option("--coxeter", common.coxeter, "linear, bipartite, or 1-based order such as 2,1,3");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ContractViolation("cannot write '" + path + "'");
  out << text;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractViolation("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ContractViolation("'" + path + "' is not valid JSON: " + e.what());
  }
}

// "auto" picks the labeling with the single Upper vertex i for c_i (Lower otherwise).
type_a::Mark parse_mark(const std::string& text, bool auto_upper = false) {
  if (text == "auto") return auto_upper ? type_a::Mark::kUpper : type_a::Mark::kLower;
  if (text == "U" || text == "upper" || text == "Upper") return type_a::Mark::kUpper;
  if (text == "L" || text == "lower" || text == "Lower") return type_a::Mark::kLower;
  throw ContractViolation("mark must be U or L, got '" + text + "'");
}

type_a::Triangulation parse_triangulation(const std::string& text) {
  // "(0,3),(0,4)" or "0-3,0-4"
  type_a::Triangulation t;
  std::string cleaned;
  for (char ch : text) cleaned += (ch == '(' || ch == ')' || ch == '-' || ch == ' ') ? ',' : ch;
  std::vector<int> values;
  std::stringstream in(cleaned);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ContractViolation("malformed triangulation '" + text + "'");
    }
  }
  if (values.size() % 2 != 0) throw ContractViolation("malformed triangulation '" + text + "'");
  for (std::size_t k = 0; k < values.size(); k += 2) t.insert(type_a::make_diagonal(values[k], values[k + 1]));
  return t;
}

void print_summary(const SystemVerification& result) {
  std::cout << result.description << ": " << result.vertices << " vertices, " << result.edges << " edges, "
            << result.faces << " faces\n";
  for (const auto& section : result.sections) {
    const auto& st = section.report.stats;
    std::cout << "  " << section.check << " [" << section.name << "]: " << (section.report.pass() ? "pass" : "FAIL")
              << " (faces " << st.faces_checked << ", pairs " << st.pairs_checked << ", edges " << st.edges_checked
              << ", violations " << st.violations << ")\n";
    for (const auto& cx : section.report.counterexamples) {
      std::cout << "    " << to_string(cx.kind) << " face " << section.system->faces[cx.face].name << ": "
                << section.system->label(cx.from) << " -> " << section.system->label(cx.to);
      if (cx.witness >= 0) std::cout << " via " << section.system->label(cx.witness);
      std::cout << "\n";
    }
  }
  for (const auto& problem : result.problems) std::cout << "  problem: " << problem << "\n";
  std::cout << (result.pass() ? "PASS" : "FAIL") << " (" << result.violations() << " violations)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter sortables, subword complexes and face verification"};
  app.require_subcommand(1);
  Common common;

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate sortable elements or vertex-subwords");
  std::string what = "sortables";
  bool list = false;
  enumerate->add_option("what", what, "sortables | subwords")->check(CLI::IsMember({"sortables", "subwords"}));
  add_system_options(enumerate, common);
  enumerate->add_flag("--list", list, "Print every element");

  // verify
  auto* verify = app.add_subcommand("verify", "Check normalization axioms and geodesics");
  std::string target = "perm";
  std::string mode = "both";
  std::string graph_file;
  int n = 4;
  int choice = 1;
  int transport_limit = 1000;
  bool deterministic = false;
  verify->add_option("target", target, "perm | assoc | typea | graph")
      ->check(CLI::IsMember({"perm", "assoc", "typea", "graph"}));
  add_system_options(verify, common);
  verify->add_option("--mode", mode, "axioms | geodesics | both")->check(CLI::IsMember({"axioms", "geodesics", "both"}));
  verify->add_option("--jobs", common.jobs, "Worker threads for geodesic checks")->check(CLI::PositiveNumber);
  verify->add_option("--output,-o", common.output, "Write the JSON report here");
  verify->add_option("--graph", graph_file, "Face system JSON (target graph)");
  verify->add_option("--n", n, "Polygon size parameter (target typea)");
  verify->add_option("--choice", choice, "Relabeling choice 1 or 2 (target typea)");
  verify->add_option("--transport-limit", transport_limit, "Largest assoc size checked letter-face by letter-face");
  verify->add_flag("--deterministic", deterministic, "Omit timestamp and timings from the report");

  // export
  auto* exporter = app.add_subcommand("export", "Export a graph as DOT or JSON");
  std::string graph_kind = "flip";
  std::string format = "dot";
  exporter->add_option("graph", graph_kind, "flip | cambrian | perm")->check(CLI::IsMember({"flip", "cambrian", "perm"}));
  add_system_options(exporter, common);
  exporter->add_option("--format", format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  exporter->add_option("--output,-o", common.output, "Output file (default stdout)");

  // typea
  auto* typea = app.add_subcommand("typea", "Type A triangulation model");
  std::string action = "triangulate";
  std::string perm_text, triangulation_text, choice1 = "auto", choice_n = "auto";
  int index_i = 1;
  typea->add_option("action", action, "triangulate | project | check-theorem")
      ->check(CLI::IsMember({"triangulate", "project", "check-theorem"}));
  typea->add_option("--n", n, "Permutations of 1..n");
  typea->add_option("--i", index_i, "Diagonal (i,i+1) for project / check-theorem");
  typea->add_option("--coxeter", common.coxeter, "Coxeter element for triangulate (default linear)");
  typea->add_option("--perm", perm_text, "One-line notation, comma-separated");
  typea->add_option("--triangulation", triangulation_text, "Diagonals such as (0,3),(0,4)");
  typea->add_option("--choice1", choice1, "Mark of x=1: U, L or auto");
  typea->add_option("--choicen", choice_n, "Mark of x=n: U, L or auto");
  bool typea_json = false;
  typea->add_flag("--json", typea_json, "Print JSON");

  // replay
  auto* replay = app.add_subcommand("replay", "Re-check the counterexamples of a report");
  std::string report_file;
  replay->add_option("report", report_file, "Report JSON written by verify")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) {
      const CoxeterSystem sys = build_coxeter_system(common.type_id);
      const CoxeterElementOrder c = CoxeterElementOrder::parse(common.coxeter, sys);
      if (what == "sortables") {
        const CambrianLattice lattice = enumerate_sortables(sys, c);
        std::cout << lattice.size() << " " << format_word(c.word()) << "-sortable elements of " << sys.type_id() << "\n";
        if (list)
          for (const auto& w : lattice.elements) {
            const std::string word = format_word(sorting_word(sys, w, c).flat);
            std::cout << (word.empty() ? "e" : word) << "\n";
          }
      } else {
        const FlipGraph g = flip_graph(sys, build_Q(sys, c));
        std::cout << g.size() << " vertex-subwords of Q = " << format_word(Word{g.q.letters}) << ", "
                  << g.edge_count() << " flips\n";
        if (list)
          for (const auto& v : g.vertices) std::cout << subword_label(v) << "\n";
      }
      return 0;
    }

    if (verify->parsed()) {
      RunConfig config;
      config.target = target;
      config.mode = *verify_mode_from_string(mode);
      config.jobs = common.jobs;
      config.cap = element_cap_from_env();
      config.transport_limit = transport_limit;
      if (target == "perm" || target == "assoc") {
        const CoxeterSystem sys = build_coxeter_system(common.type_id);
        config.type_id = sys.type_id();
        if (target == "assoc") config.coxeter = CoxeterElementOrder::parse(common.coxeter, sys).letters();
      } else if (target == "typea") {
        config.n = n;
        config.choice = choice;
      } else {
        if (graph_file.empty()) throw ContractViolation("verify graph needs --graph FILE");
        config.graph = read_json_file(graph_file);
        const FaceSystem fs = face_system_from_json(config.graph);
        const auto issues = fs.validate();
        for (const auto& issue : issues) std::cerr << "warning: " << issue << "\n";
        if (target == "graph" && config.mode != VerifyMode::kGeodesics) config.mode = VerifyMode::kGeodesics;
      }
      const SystemVerification result = run_verification(config);
      print_summary(result);
      if (!common.output.empty()) write_output(common.output, report_json(result, config, deterministic).dump(2) + "\n");
      return result.pass() ? 0 : kExitViolation;
    }

    if (exporter->parsed()) {
      const CoxeterSystem sys = build_coxeter_system(common.type_id);
      std::string text;
      if (graph_kind == "perm") {
        const PermFaceSystem perm = perm_face_system(sys, element_cap_from_env());
        text = format == "dot" ? to_dot(perm.faces.graph, perm.faces.labels, "perm " + sys.type_id())
                               : face_system_json(perm.faces).dump(2) + "\n";
      } else {
        const CoxeterElementOrder c = CoxeterElementOrder::parse(common.coxeter, sys);
        if (graph_kind == "flip") {
          const AssocFaceSystem assoc = assoc_face_system(sys, c);
          text = format == "dot" ? to_dot(assoc.faces.graph, assoc.faces.labels, "flip " + sys.type_id())
                                 : flip_graph_json(assoc.flips).dump(2) + "\n";
        } else {
          const CambrianFaceSystem cambrian = cambrian_face_system(sys, c);
          text = format == "dot" ? to_dot(cambrian.faces.graph, cambrian.faces.labels, "cambrian " + sys.type_id())
                                 : cambrian_json(sys, cambrian.lattice).dump(2) + "\n";
        }
      }
      write_output(common.output, text);
      return 0;
    }

    if (typea->parsed()) {
      using namespace type_a;
      if (action == "triangulate") {
        const CoxeterElementOrder c = parse_order(common.coxeter, n);
        const LabeledPolygon p = polygon_labeling(cycle_form(c, n), parse_mark(choice1), parse_mark(choice_n));
        const Permutation w = parse_permutation(perm_text, n);
        const Triangulation t = triangulation_of(w, p);
        if (typea_json) {
          std::cout << json{{"polygon", polygon_json(p)}, {"perm", w}, {"triangulation", triangulation_json(t)}}.dump(2)
                    << "\n";
        } else {
          std::cout << "boundary:";
          for (int x : p.boundary) std::cout << ' ' << x;
          std::cout << "\ntriangulation: " << format_triangulation(t) << "\n";
        }
        return 0;
      }
      if (action == "project") {
        const LabeledPolygon p = polygon_labeling(cycle_form(c_i(n, index_i), n), parse_mark(choice1, index_i == 1),
                                                 parse_mark(choice_n));
        const Triangulation t = parse_triangulation(triangulation_text);
        if (!is_triangulation(p, t)) throw ContractViolation("input is not a triangulation of the c_i-labeled polygon");
        const Triangulation out = project_triangulation(t, index_i, p);
        if (typea_json) {
          std::cout << json{{"polygon", polygon_json(p)}, {"input", triangulation_json(t)}, {"projection", triangulation_json(out)}}
                           .dump(2)
                    << "\n";
        } else {
          std::cout << format_triangulation(out) << "\n";
        }
        return 0;
      }
      const Permutation w = parse_permutation(perm_text, n);
      const TheoremCheck check = check_projection_theorem(n, index_i, w, parse_mark(choice1, index_i == 1), parse_mark(choice_n));
      if (typea_json) {
        std::cout << json{{"perm", w},
                          {"projected", check.projected},
                          {"left", triangulation_json(check.left)},
                          {"right", triangulation_json(check.right)},
                          {"equal", check.equal}}
                         .dump(2)
                  << "\n";
      } else {
        std::string blocks;
        for (int k = 0; k < n; ++k)
          blocks += (k ? (k == index_i ? " | " : ",") : "") + std::to_string(check.projected[k]);
        std::cout << "parabolic projection: " << blocks << "\n";
        std::cout << "T(projection):        " << format_triangulation(check.left) << "\n";
        std::cout << "projection of T(w):   " << format_triangulation(check.right) << "\n";
        std::cout << (check.equal ? "EQUAL" : "DIFFERENT") << "\n";
      }
      return check.equal ? 0 : kExitViolation;
    }

    if (replay->parsed()) {
      const ReplayResult result = replay_report(read_json_file(report_file));
      for (const auto& line : result.lines) std::cout << line << "\n";
      std::cout << result.reproduced << "/" << result.counterexamples << " counterexamples reproduced\n";
      return result.ok() ? 0 : kExitViolation;
    }
  } catch (const Error& e) {
    std::cerr << "coxfaces: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "coxfaces: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
