// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
//
//   hamplane_acceptance [path/to/hamplane]
//
// With the CLI path, criteria 1-4 also run the command line and check its
// exit code and report.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hamplane/oracle.hpp"
#include "hamplane/search.hpp"
#include "support/test_support.hpp"

using namespace hamplane;
using namespace hamplane::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string g_cli;

struct CliRun {
  int code = -1;
  nlohmann::json report;
};

CliRun run_cli(const std::string& args) {
  CliRun out;
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return out;
  std::string text;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, got);
  const int status = pclose(pipe);
  out.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  out.report = nlohmann::json::parse(text, nullptr, false);
  return out;
}

CycleBasis face_basis_of(const CorpusEntry& e) {
  const FaceTracing faces = trace_faces(e.graph, *e.rotation);
  return face_basis(e.graph, faces, largest_face(faces));
}

std::vector<CycleBasis> bases_of(const CorpusEntry& e) {
  std::vector<CycleBasis> out{fundamental_basis(e.graph)};
  if (e.rotation) out.push_back(face_basis_of(e));
  return out;
}

std::vector<Cycle> members_of(const HamiltonPlane& p, const CycleBasis& basis) {
  std::vector<Cycle> out;
  for (std::size_t i : p.members) out.push_back(basis.cycles[i]);
  return out;
}

// 1. Herschel: parity certificate on the inside form; oracle agrees.
void herschel(Outcome& o) {
  const CorpusEntry& h = corpus_entry("herschel");
  const DegreeCounts faces = face_degrees(trace_faces(h.graph, *h.rotation));
  o.require(faces == DegreeCounts{{4, 9}}, "9 quadrilateral faces");
  o.require(solve_inside(faces, 11).empty(), "2x = 9 has no solution");
  const auto cert = modular_obstruction(faces, 11);
  o.require(cert && cert->modulus == 2 && cert->form == GrinbergForm::inside, "modulus-2 inside certificate");
  o.require(cert && replay(*cert), "certificate replays");
  const OracleResult r = hamiltonian_oracle(h.graph);
  o.require(r.verdict == OracleVerdict::non_hamiltonian, "oracle: non-Hamiltonian");
  o.detail << "certificate: " << (cert ? cert->congruence : "none") << "; oracle " << to_string(r.verdict) << " ("
           << r.nodes << " nodes)";
  if (!g_cli.empty()) {
    const CliRun cli = run_cli("grinberg corpus:herschel");
    o.require(cli.code == 1, "cli exit 1");
    o.require(!cli.report.is_discarded() && cli.report["certificate"]["modulus"] == 2, "cli certificate modulus 2");
    o.detail << "; cli exit " << cli.code;
  }
}

// 2. Grinberg graph: modulus-3 certificate on the full form.
void grinberg_graph(Outcome& o) {
  const CorpusEntry& g = corpus_entry("grinberg-graph");
  o.require(g.graph.vertex_count() == 46, "46 vertices");
  bool cubic = true;
  for (VertexId v = 0; v < g.graph.vertex_count(); ++v) cubic = cubic && g.graph.degree(v) == 3;
  o.require(cubic, "cubic");
  const DegreeCounts faces = face_degrees(trace_faces(g.graph, *g.rotation));
  o.require(faces == DegreeCounts{{5, 21}, {8, 3}, {9, 1}}, "faces 21x5, 3x8, 1x9");
  const auto cert = modular_obstruction(faces, 46);
  o.require(cert && cert->modulus == 3 && cert->form == GrinbergForm::full, "modulus-3 full certificate");
  o.require(cert && replay(*cert), "certificate replays");
  o.detail << "certificate: " << (cert ? cert->congruence : "none");
  if (!g_cli.empty()) {
    const CliRun cli = run_cli("grinberg corpus:grinberg-graph");
    o.require(cli.code == 1, "cli exit 1");
    o.require(!cli.report.is_discarded() && cli.report["certificate"]["modulus"] == 3, "cli certificate modulus 3");
    o.detail << "; cli exit " << cli.code;
  }
}

// Optional cross-check for 2, outside the timed section.
std::string grinberg_oracle_note() {
  const OracleResult r = hamiltonian_oracle(corpus_entry("grinberg-graph").graph, {std::uint64_t{1} << 40, 600.0});
  return std::string("oracle cross-check: ") + to_string(r.verdict) + " (" + std::to_string(r.nodes) + " nodes)";
}

// 3. Dodecahedron: x_5 = 6 and a plane of six pentagons.
void dodecahedron(Outcome& o) {
  const CorpusEntry& d = corpus_entry("dodecahedron");
  const auto sols = solve_inside({{5, 12}}, 20);
  o.require(sols.size() == 1 && sols[0].counts == DegreeCounts{{5, 6}}, "unique solution x_5 = 6");
  const CycleBasis basis = face_basis_of(d);
  o.require(basis.dimension() == 11, "dimension 11");
  const PlaneSearchResult r = search_hamilton_plane(basis, d.graph, {});
  std::size_t six_pentagons = 0;
  bool audits = true;
  for (const HamiltonPlane& p : r.planes) {
    const auto members = members_of(p, basis);
    const bool pentagons = members.size() == 6 &&
                           std::all_of(members.begin(), members.end(), [](const Cycle& c) { return c.size() == 5; });
    if (!pentagons || !is_elementary_cycle(p.sum.edges, d.graph) || p.sum.order() != 20) continue;
    ++six_pentagons;
    const AuditRecord a = audit_inclusion_exclusion(members, 20);
    audits = audits && a.excess == 18 && a.excess_identity;
  }
  o.require(six_pentagons >= 1, "a plane of six pentagons with an order-20 sum");
  o.require(audits, "sum (size - 2) = 18 on every such plane");
  o.detail << r.planes.size() << " planes, " << six_pentagons << " of six pentagons, " << r.examined
           << " subsets examined";
}

// 4. K_{2,4}: an equation-satisfying, covering, non-Hamiltonian V0 pair.
void k24(Outcome& o) {
  const CorpusEntry& k = corpus_entry("k24");
  const CounterexampleHunt hunt = hunt_counterexamples(fundamental_basis(k.graph), k.graph, {});
  bool v0 = false;
  for (const CounterexampleReport& r : hunt.result.reports) {
    v0 = v0 || (r.pairs.count(PairClass::V0) >= 1 && replay(r, hunt.basis, k.graph));
  }
  o.require(!hunt.result.reports.empty(), "at least one report");
  o.require(v0, "a replayable report with a V0 pair");
  const OracleResult r = hamiltonian_oracle(k.graph);
  o.require(r.verdict == OracleVerdict::non_hamiltonian, "oracle: non-Hamiltonian");
  o.detail << hunt.result.reports.size() << " report(s) after ";
  if (hunt.transform) {
    o.detail << "transform (" << hunt.transform->first << " <- " << hunt.transform->first << " + "
             << hunt.transform->second << ")";
  } else {
    o.detail << "no transform";
  }
  if (!g_cli.empty()) {
    const CliRun cli = run_cli("plane corpus:k24");
    o.require(cli.code == 1, "cli exit 1");
    o.require(!cli.report.is_discarded() && cli.report["planes"].empty() &&
                  cli.report["counterexamples"]["reports"].size() == 1,
              "cli: 0 planes, 1 counterexample");
    o.detail << "; cli exit " << cli.code;
  }
}

// 5. Unfiltered search and oracle agree wherever the fallback runs.
void oracle_equivalence(Outcome& o) {
  std::size_t compared = 0, mismatches = 0;
  for (const CorpusEntry& e : corpus()) {
    if (e.graph.cycle_space_dimension() > kDefaultDimLimit) continue;
    const OracleResult r = hamiltonian_oracle(e.graph);
    o.require(r.verdict != OracleVerdict::unknown, e.name + ": oracle finished");
    for (const CycleBasis& basis : bases_of(e)) {
      const PlaneSearchResult s = search_hamilton_plane(basis, e.graph, {std::uint64_t{1} << 21, 600.0, 1});
      o.require(s.exhaustive(), e.name + ": fallback complete");
      ++compared;
      if (s.planes.empty() != (r.verdict != OracleVerdict::hamiltonian)) {
        ++mismatches;
        o.detail << e.name << " mismatch; ";
      }
    }
  }
  o.require(mismatches == 0, "zero mismatches");
  o.detail << compared << " (graph, basis) pairs, " << mismatches << " mismatches";
}

// 6. GF(2) algebra on 1000 random draws per corpus graph.
void gf2_suite(Outcome& o) {
  Rng rng(0x6f2);
  std::size_t failures = 0, graphs = 0;
  for (const CorpusEntry& e : corpus()) {
    ++graphs;
    const Graph& g = e.graph;
    const CycleBasis basis = fundamental_basis(g);
    if (gf2_rank(basis.vectors()) != g.edge_count() - g.vertex_count() + 1) ++failures;
    const BasisRepresenter rep(basis);
    for (int k = 0; k < 1000; ++k) {
      const EdgeVector a = random_vector(rng, g.edge_count()), b = random_vector(rng, g.edge_count());
      if (!cycle_sum(a, a).none() || cycle_sum(cycle_sum(a, b), b) != a) ++failures;
      const auto subset = random_subset(rng, basis.dimension());
      if (rep.represent(subset_sum(basis, subset, g.edge_count())) != subset) ++failures;
    }
  }
  o.require(failures == 0, "zero failures");
  o.detail << graphs << " graphs x 1000 draws, " << failures << " failures";
}

// 7. Identity audit on all-VE, triple-free planes.
void identity_audit(Outcome& o) {
  std::size_t planes = 0, qualifying = 0, violations = 0;
  for (const CorpusEntry& e : corpus()) {
    for (const CycleBasis& basis : bases_of(e)) {
      const PlaneSearchResult r = search_hamilton_plane(basis, e.graph, {});
      for (const HamiltonPlane& p : r.planes) {
        ++planes;
        const AuditRecord a =
            audit_inclusion_exclusion(members_of(p, basis), static_cast<std::int64_t>(e.graph.vertex_count()));
        if (!p.pairs.joint_pairs_all_ve() || !a.triple_free) continue;
        ++qualifying;
        if (!(a.union_identity && a.pairs_all_two && a.chain_count && a.excess_identity)) {
          ++violations;
          o.detail << e.name << " plane violates; ";
        }
      }
    }
  }
  o.require(qualifying > 0, "at least one qualifying plane");
  o.require(violations == 0, "identities hold exactly");
  o.detail << planes << " planes, " << qualifying << " all-VE and triple-free, " << violations << " violations";
}

// 8. Certificates are sound against exhaustive enumeration.
void certificate_soundness(Outcome& o) {
  Rng rng(0x5eed);
  std::size_t samples = 0, certified = 0, violations = 0;
  while (samples < 200) {
    const std::size_t face_count = 1 + rng() % 8;
    DegreeCounts faces;
    std::int64_t degree_sum = 0;
    for (std::size_t f = 0; f < face_count; ++f) {
      const std::int64_t d = 3 + static_cast<std::int64_t>(rng() % 7);
      ++faces[d];
      degree_sum += d;
    }
    // n from Euler's formula, so both forms describe the same embedding.
    const std::int64_t n = 2 + degree_sum / 2 - static_cast<std::int64_t>(face_count);
    if (degree_sum % 2 != 0 || n < 3) continue;
    ++samples;
    const auto cert = modular_obstruction(faces, n);
    if (!cert) continue;
    ++certified;
    const bool sound = replay(*cert) && brute_force_inside_solutions(faces, n).empty() &&
                       !brute_force_full_feasible(faces) && solve_inside(faces, n).empty();
    if (!sound) ++violations;
  }
  o.require(violations == 0, "zero soundness violations");
  o.detail << samples << " multisets, " << certified << " certified, " << violations << " violations";
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> body;
  double limit_seconds;  // 0: untimed
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  corpus();  // parse once, outside the timed sections

  const std::vector<Criterion> criteria = {
      {1, "herschel certificate and oracle", herschel, 1.0},
      {2, "grinberg-graph modulus-3 certificate", grinberg_graph, 1.0},
      {3, "dodecahedron six-pentagon plane", dodecahedron, 10.0},
      {4, "k24 equation counterexample", k24, 1.0},
      {5, "plane search vs oracle", oracle_equivalence, 0.0},
      {6, "GF(2) algebra", gf2_suite, 0.0},
      {7, "identity audit", identity_audit, 0.0},
      {8, "certificate soundness", certificate_soundness, 0.0},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail << " [over the " << c.limit_seconds << " s limit]";
    }
    if (c.id == 2) o.detail << "; " << grinberg_oracle_note();
    failed += o.pass ? 0 : 1;
    std::printf("%s criterion %d: %s (%.3f s) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                o.detail.str().c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
