#ifndef HAMPLANE_REPORT_HPP
#define HAMPLANE_REPORT_HPP

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "hamplane/corpus.hpp"
#include "hamplane/oracle.hpp"
#include "hamplane/search.hpp"

namespace hamplane {

// JSON shapes match the schemas under schemas/. Every report carries a
// "report" discriminator and a "schema_version".

nlohmann::json to_json(const Cycle& c);
nlohmann::json to_json(const DegreeCounts& counts);  // {"5": 12, ...}
nlohmann::json to_json(const GrinbergReport& r);
nlohmann::json to_json(const ModularCertificate& c);
nlohmann::json to_json(const AuditRecord& a);
nlohmann::json to_json(const PairClassification& p);

nlohmann::json basis_report(const Graph& g, const CycleBasis& basis, const std::string& kind);

struct GrinbergAnalysis {
  FaceTracing faces;
  DegreeCounts degrees;
  // Partition mode: the supplied inside faces and their evaluation.
  std::optional<std::vector<std::size_t>> inside;
  std::optional<GrinbergReport> evaluation;
  // Multiset mode.
  std::vector<SizeSolution> solutions;
  std::optional<ModularCertificate> certificate;
};

nlohmann::json grinberg_report(const Graph& g, const GrinbergAnalysis& a, const std::string& verdict);

struct PlaneAnalysis {
  std::string basis_kind;
  CycleBasis basis;
  PlaneSearchResult planes;
  std::vector<AuditRecord> audits;  // one per plane
  CounterexampleHunt hunt;
};

nlohmann::json plane_report(const Graph& g, const PlaneAnalysis& a, const SearchBudget& budget,
                            const std::string& verdict);

nlohmann::json oracle_report(const Graph& g, const OracleResult& r);

nlohmann::json corpus_list_report(const std::vector<CorpusEntry>& entries);

}  // namespace hamplane

#endif  // HAMPLANE_REPORT_HPP
