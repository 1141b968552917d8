// hamplane: cycle-space analysis of graphs from the command line.
//
// Exit codes: 0 positive finding, 1 certified negative, 2 input error,
// 3 inconclusive (budget, or a partition that proves nothing).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "hamplane/corpus.hpp"
#include "hamplane/report.hpp"

namespace {

using namespace hamplane;
using nlohmann::json;

enum Exit : int { kPositive = 0, kNegative = 1, kInputError = 2, kInconclusive = 3 };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph;
  std::string rotation;
  std::string basis_kind = "fundamental";
  std::vector<std::size_t> inside;
  bool inside_given = false;
  SearchBudget budget;
  std::size_t dim_limit = kDefaultDimLimit;
  std::uint64_t max_nodes = OracleBudget{}.max_nodes;
  int indent = 2;
  std::string corpus_action;
  std::string corpus_name;
  std::string out_dir;
  bool emit_rotation = false;
};

void print(const json& j, const Options& o) { std::cout << j.dump(o.indent) << '\n'; }

GraphSource load(const Options& o) { return load_graph_source(o.graph, o.rotation); }

const RotationSystem& require_rotation(const GraphSource& src) {
  if (!src.rotation) throw InputError("a rotation system is required (--rotation FILE or a corpus entry with one)");
  return *src.rotation;
}

FaceTracing spherical_faces(const GraphSource& src) {
  FaceTracing faces = trace_faces(src.graph, require_rotation(src));
  if (!faces.spherical()) {
    throw InputError("rotation is not a sphere embedding: n - m + f = " + std::to_string(faces.euler_characteristic));
  }
  return faces;
}

CycleBasis build_basis(const Options& o, const GraphSource& src) {
  if (o.basis_kind == "face") {
    const FaceTracing faces = spherical_faces(src);
    return face_basis(src.graph, faces, largest_face(faces));
  }
  return fundamental_basis(src.graph);
}

int cmd_basis(const Options& o) {
  const GraphSource src = load(o);
  print(basis_report(src.graph, build_basis(o, src), o.basis_kind), o);
  return kPositive;
}

int cmd_grinberg(const Options& o) {
  const GraphSource src = load(o);
  GrinbergAnalysis a;
  a.faces = spherical_faces(src);
  a.degrees = face_degrees(a.faces);
  const auto n = static_cast<std::int64_t>(src.graph.vertex_count());
  if (o.inside_given) {
    std::set<std::size_t> chosen;
    for (std::size_t f : o.inside) {
      if (f >= a.faces.faces.size()) {
        throw InputError("inside face " + std::to_string(f) + " out of range (" +
                         std::to_string(a.faces.faces.size()) + " faces)");
      }
      if (!chosen.insert(f).second) throw InputError("inside face " + std::to_string(f) + " listed twice");
    }
    FacePartition p;
    p.n = n;
    for (std::size_t f = 0; f < a.faces.faces.size(); ++f) {
      auto& side = chosen.contains(f) ? p.inside : p.outside;
      ++side[static_cast<std::int64_t>(a.faces.faces[f].degree())];
    }
    a.inside = std::vector<std::size_t>(chosen.begin(), chosen.end());
    a.evaluation = eval_full(p);
    const bool ok = a.evaluation->satisfied_full && a.evaluation->satisfied_inside;
    print(grinberg_report(src.graph, a, ok ? "partition_satisfies" : "partition_fails"), o);
    return ok ? kPositive : kInconclusive;
  }
  a.solutions = solve_inside(a.degrees, n);
  a.certificate = modular_obstruction(a.degrees, n);
  std::string verdict = "solutions_exist";
  int code = kPositive;
  if (a.certificate) {
    verdict = "certified_infeasible";
    code = kNegative;
  } else if (a.solutions.empty()) {
    verdict = "exhaustively_infeasible";
    code = kNegative;
  }
  print(grinberg_report(src.graph, a, verdict), o);
  return code;
}

int cmd_plane(const Options& o) {
  const GraphSource src = load(o);
  PlaneAnalysis a;
  a.basis_kind = o.basis_kind;
  a.basis = build_basis(o, src);
  a.planes = search_hamilton_plane(a.basis, src.graph, o.budget, o.dim_limit);
  for (const HamiltonPlane& p : a.planes.planes) {
    std::vector<Cycle> members;
    for (std::size_t i : p.members) members.push_back(a.basis.cycles[i]);
    a.audits.push_back(audit_inclusion_exclusion(members, static_cast<std::int64_t>(src.graph.vertex_count())));
  }
  a.hunt = hunt_counterexamples(a.basis, src.graph, o.budget);
  std::string verdict = "plane_found";
  int code = kPositive;
  if (a.planes.planes.empty()) {
    const bool exhaustive = a.planes.exhaustive();
    verdict = exhaustive ? "no_plane" : "inconclusive";
    code = exhaustive ? kNegative : kInconclusive;
  }
  print(plane_report(src.graph, a, o.budget, verdict), o);
  return code;
}

int cmd_oracle(const Options& o) {
  const GraphSource src = load(o);
  const OracleResult r = hamiltonian_oracle(src.graph, {o.max_nodes, o.budget.max_seconds});
  print(oracle_report(src.graph, r), o);
  switch (r.verdict) {
    case OracleVerdict::hamiltonian: return kPositive;
    case OracleVerdict::non_hamiltonian: return kNegative;
    case OracleVerdict::unknown: return kInconclusive;
  }
  return kInconclusive;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write '" + path.string() + "'");
}

int cmd_corpus(const Options& o) {
  if (o.corpus_action == "list") {
    print(corpus_list_report(corpus()), o);
    return kPositive;
  }
  const CorpusEntry& e = corpus_entry(o.corpus_name);
  if (!o.out_dir.empty()) {
    const std::filesystem::path dir(o.out_dir);
    std::filesystem::create_directories(dir);
    write_file(dir / (e.name + ".edges"), e.edges_text);
    if (e.rotation) write_file(dir / (e.name + ".rot"), e.rotation_text);
    return kPositive;
  }
  if (o.emit_rotation) {
    if (!e.rotation) throw InputError("corpus entry '" + e.name + "' has no rotation system");
    std::cout << e.rotation_text;
  } else {
    std::cout << e.edges_text;
  }
  return kPositive;
}

void add_graph_args(CLI::App* cmd, Options& o) {
  cmd->add_option("graph", o.graph, "Edge list or graph6 file, or corpus:<name>")->required();
  cmd->add_option("--rotation", o.rotation, "Rotation system file (overrides a corpus rotation)");
}

void add_budget_args(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-subsets", o.budget.max_subsets, "Subset budget")->capture_default_str();
  cmd->add_option("--max-seconds", o.budget.max_seconds, "Wall-clock budget in seconds")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

void add_basis_arg(CLI::App* cmd, Options& o) {
  cmd->add_option("--basis", o.basis_kind, "Cycle basis: fundamental (BFS tree) or face (needs a rotation)")
      ->check(CLI::IsMember({"fundamental", "face"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cycle-space analysis of graphs: bases, Grinberg checks, Hamilton planes"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--indent", o.indent, "JSON indent; -1 for a single line")->capture_default_str();

  auto* basis = app.add_subcommand("basis", "Print a cycle basis");
  add_graph_args(basis, o);
  add_basis_arg(basis, o);

  auto* grinberg = app.add_subcommand("grinberg", "Evaluate the Grinberg condition on the traced faces");
  add_graph_args(grinberg, o);
  grinberg->add_option("--inside", o.inside, "Comma-separated indices of inside faces")->delimiter(',');

  auto* plane = app.add_subcommand("plane", "Search a cycle basis for Hamilton planes and counterexamples");
  add_graph_args(plane, o);
  add_basis_arg(plane, o);
  add_budget_args(plane, o);
  plane->add_option("--workers", o.budget.workers, "Worker threads")->check(CLI::Range(1U, 256U))->capture_default_str();
  plane->add_option("--dim-limit", o.dim_limit, "Largest dimension for the unfiltered fallback")
      ->check(CLI::Range(std::size_t{0}, std::size_t{62}))
      ->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Decide Hamiltonicity by backtracking");
  add_graph_args(oracle, o);
  oracle->add_option("--max-seconds", o.budget.max_seconds, "Wall-clock budget in seconds")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  oracle->add_option("--max-nodes", o.max_nodes, "Search node budget")->capture_default_str();

  auto* corpus_cmd = app.add_subcommand("corpus", "List or emit built-in graphs");
  corpus_cmd->require_subcommand(1);
  corpus_cmd->fallthrough();
  auto* list = corpus_cmd->add_subcommand("list", "Names and known facts as JSON");
  auto* emit = corpus_cmd->add_subcommand("emit", "Print an edge list (or rotation), or write both to --out");
  emit->add_option("name", o.corpus_name, "Corpus entry")->required();
  emit->add_flag("--rotation", o.emit_rotation, "Print the rotation system instead of the edge list");
  emit->add_option("--out", o.out_dir, "Directory to write NAME.edges and NAME.rot into");
  list->callback([&] { o.corpus_action = "list"; });
  emit->callback([&] { o.corpus_action = "emit"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*basis) return cmd_basis(o);
    if (*grinberg) {
      o.inside_given = grinberg->count("--inside") > 0;
      return cmd_grinberg(o);
    }
    if (*plane) return cmd_plane(o);
    if (*oracle) return cmd_oracle(o);
    if (*corpus_cmd) return cmd_corpus(o);
  } catch (const GraphError& e) {
    std::cerr << "hamplane: invalid graph input: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "hamplane: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    std::cerr << "hamplane: " << e.what() << '\n';
  }
  return kInputError;
}
