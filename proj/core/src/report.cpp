#include "hamplane/report.hpp"

namespace hamplane {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

json header(const char* kind, const Graph& g) {
  return {{"report", kind},
          {"schema_version", kSchemaVersion},
          {"graph", {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"dimension", g.cycle_space_dimension()}}}};
}

json edge_ids(const EdgeVector& v) {
  json out = json::array();
  v.for_each([&](EdgeId e) { out.push_back(e); });
  return out;
}

json size_solution(const SizeSolution& s) { return to_json(s.counts); }

}  // namespace

json to_json(const Cycle& c) {
  return {{"vertices", c.vertices}, {"edges", edge_ids(c.edges)}, {"size", c.size()}};
}

json to_json(const DegreeCounts& counts) {
  json out = json::object();
  for (auto [degree, count] : counts) out[std::to_string(degree)] = count;
  return out;
}

json to_json(const GrinbergReport& r) {
  return {{"lhs_full", r.lhs_full},
          {"lhs_inside", r.lhs_inside},
          {"rhs_inside", r.rhs_inside},
          {"satisfied_full", r.satisfied_full},
          {"satisfied_inside", r.satisfied_inside}};
}

json to_json(const ModularCertificate& c) {
  json rows = json::array();
  for (const ResidueRow& r : c.rows) {
    rows.push_back({{"degree", r.degree},
                    {"multiplicity", r.multiplicity},
                    {"coefficient", r.coefficient},
                    {"attainable", r.attainable}});
  }
  return {{"modulus", c.modulus},
          {"form", to_string(c.form)},
          {"n", c.n},
          {"target_residue", c.target_residue},
          {"rows", rows},
          {"attainable_totals", c.attainable_totals},
          {"congruence", c.congruence},
          {"replays", replay(c)}};
}

json to_json(const AuditRecord& a) {
  json irregular = json::array();
  for (auto [i, j] : a.irregular_pairs) irregular.push_back({i, j});
  return {{"n", a.n},
          {"cycle_count", a.cycle_count},
          {"union_size", a.union_size},
          {"vertex_sum", a.vertex_sum},
          {"joint_pairs", a.joint_pairs},
          {"pair_intersection_sum", a.pair_intersection_sum},
          {"max_multiplicity", a.max_multiplicity},
          {"triple_free", a.triple_free},
          {"crowded_vertices", a.crowded_vertices},
          {"irregular_pairs", irregular},
          {"union_identity", a.union_identity},
          {"pairs_all_two", a.pairs_all_two},
          {"chain_count", a.chain_count},
          {"excess", a.excess},
          {"excess_identity", a.excess_identity},
          {"union_check", a.union_check_passes()},
          {"pair_check", a.pair_check_passes()},
          {"passes", a.passes()}};
}

json to_json(const PairClassification& p) {
  json pairs = json::array();
  for (const PairEntry& e : p.pairs) {
    pairs.push_back({{"i", e.i},
                     {"j", e.j},
                     {"shared_vertices", e.shared_vertices},
                     {"shared_edges", e.shared_edges},
                     {"class", to_string(e.cls)}});
  }
  json counts = json::object();
  for (std::size_t c = 0; c < kPairClassCount; ++c) counts[to_string(static_cast<PairClass>(c))] = p.counts[c];
  return {{"pairs", pairs},
          {"counts", counts},
          {"joint_pairs_all_ve", p.joint_pairs_all_ve()},
          {"joint_pairs_ve_or_v0", p.joint_pairs_ve_or_v0()}};
}

json basis_report(const Graph& g, const CycleBasis& basis, const std::string& kind) {
  json out = header("basis", g);
  json cycles = json::array();
  for (const Cycle& c : basis.cycles) cycles.push_back(to_json(c));
  out["basis"] = {{"kind", kind},
                  {"dimension", basis.dimension()},
                  {"tree_edges", basis.tree_edges},
                  {"sizes", to_json(cycle_sizes(basis))},
                  {"cycles", cycles}};
  return out;
}

json grinberg_report(const Graph& g, const GrinbergAnalysis& a, const std::string& verdict) {
  json out = header("grinberg", g);
  json faces = json::array();
  for (const Face& f : a.faces.faces) faces.push_back({{"degree", f.degree()}, {"vertices", f.vertices()}});
  out["faces"] = {{"count", a.faces.faces.size()},
                  {"euler_characteristic", a.faces.euler_characteristic},
                  {"degrees", to_json(a.degrees)},
                  {"list", faces}};
  if (a.inside) {
    out["mode"] = "partition";
    out["inside"] = *a.inside;
    out["evaluation"] = to_json(*a.evaluation);
  } else {
    out["mode"] = "multiset";
    json sols = json::array();
    for (const SizeSolution& s : a.solutions) sols.push_back(size_solution(s));
    out["solutions"] = sols;
    out["certificate"] = a.certificate ? to_json(*a.certificate) : json(nullptr);
  }
  out["verdict"] = verdict;
  return out;
}

json plane_report(const Graph& g, const PlaneAnalysis& a, const SearchBudget& budget, const std::string& verdict) {
  json out = header("plane", g);
  const PlaneSearchResult& r = a.planes;
  out["basis"] = {{"kind", a.basis_kind}, {"dimension", a.basis.dimension()}, {"sizes", to_json(cycle_sizes(a.basis))}};
  json sols = json::array();
  for (const SizeSolution& s : r.size_solutions) sols.push_back(size_solution(s));
  out["size_solutions"] = sols;

  json planes = json::array();
  for (std::size_t k = 0; k < r.planes.size(); ++k) {
    const HamiltonPlane& p = r.planes[k];
    json members = json::array();
    for (std::size_t i : p.members) members.push_back({{"index", i}, {"cycle", to_json(a.basis.cycles[i])}});
    planes.push_back({{"members", members},
                      {"sum", to_json(p.sum)},
                      {"pairs", to_json(p.pairs)},
                      {"excess", p.excess},
                      {"grinberg_identity", p.grinberg_identity},
                      {"found_by", to_string(p.found_by)},
                      {"audit", to_json(a.audits[k])}});
  }
  out["planes"] = planes;

  json reports = json::array();
  for (const CounterexampleReport& c : a.hunt.result.reports) {
    reports.push_back({{"members", c.members},
                       {"solution", size_solution(c.solution)},
                       {"reason", to_string(c.reason)},
                       {"pairs", to_json(c.pairs)}});
  }
  json transform = nullptr;
  if (a.hunt.transform) transform = {{"replaced", a.hunt.transform->first}, {"added", a.hunt.transform->second}};
  json hunt_cycles = json::array();
  if (a.hunt.transform) {
    for (const Cycle& c : a.hunt.basis.cycles) hunt_cycles.push_back(to_json(c));
  }
  out["counterexamples"] = {{"transform", transform},
                            {"transformed_basis", hunt_cycles},
                            {"bases_tried", a.hunt.bases_tried},
                            {"examined", a.hunt.result.examined},
                            {"truncated", a.hunt.result.truncated},
                            {"reports", reports}};

  out["budget"] = {{"max_subsets", budget.max_subsets},
                   {"max_seconds", budget.max_seconds},
                   {"workers", budget.workers},
                   {"examined", r.examined},
                   {"filtered_complete", r.filtered_complete},
                   {"fallback_run", r.fallback_run},
                   {"fallback_complete", r.fallback_complete},
                   {"truncated", r.truncated}};
  out["verdict"] = verdict;
  return out;
}

json oracle_report(const Graph& g, const OracleResult& r) {
  json out = header("oracle", g);
  out["verdict"] = to_string(r.verdict);
  out["cycle"] = r.cycle ? to_json(*r.cycle) : json(nullptr);
  out["nodes"] = r.nodes;
  return out;
}

json corpus_list_report(const std::vector<CorpusEntry>& entries) {
  json list = json::array();
  for (const CorpusEntry& e : entries) {
    json facts = json::object();
    if (e.facts.hamiltonian) {
      facts["hamiltonian"] = {{"value", e.facts.hamiltonian->value}, {"derived_by", e.facts.hamiltonian->derived_by}};
    }
    if (e.facts.face_degrees) {
      facts["face_degrees"] = {{"value", to_json(e.facts.face_degrees->value)},
                               {"derived_by", e.facts.face_degrees->derived_by}};
    }
    if (e.facts.certificate_modulus) {
      facts["certificate_modulus"] = {{"value", e.facts.certificate_modulus->value},
                                      {"derived_by", e.facts.certificate_modulus->derived_by}};
    }
    list.push_back({{"name", e.name},
                    {"n", e.graph.vertex_count()},
                    {"m", e.graph.edge_count()},
                    {"dimension", e.graph.cycle_space_dimension()},
                    {"rotation", e.rotation.has_value()},
                    {"provenance", e.provenance},
                    {"facts", facts}});
  }
  return {{"report", "corpus"}, {"schema_version", kSchemaVersion}, {"entries", list}};
}

}  // namespace hamplane
