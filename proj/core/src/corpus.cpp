#include "hamplane/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "corpus_data.hpp"

namespace hamplane {

namespace {

using nlohmann::json;

template <typename T>
std::optional<KnownFact<T>> read_fact(const json& facts, const char* key) {
  if (!facts.contains(key)) return std::nullopt;
  const json& f = facts.at(key);
  return KnownFact<T>{f.at("value").get<T>(), f.at("derived_by").get<std::string>()};
}

std::optional<KnownFact<DegreeCounts>> read_degrees(const json& facts) {
  if (!facts.contains("face_degrees")) return std::nullopt;
  const json& f = facts.at("face_degrees");
  KnownFact<DegreeCounts> out;
  for (const auto& [degree, count] : f.at("value").items()) out.value[std::stoll(degree)] = count.get<std::int64_t>();
  out.derived_by = f.at("derived_by").get<std::string>();
  return out;
}

CorpusEntry load_entry(const detail::RawCorpusFile& raw) {
  CorpusEntry e;
  e.name = raw.name;
  e.edges_text = raw.edges;
  e.rotation_text = raw.rotation;
  e.graph = parse_edge_list(e.edges_text);
  if (!e.rotation_text.empty()) e.rotation = parse_rotation(e.graph, e.rotation_text);
  const json facts = json::parse(raw.facts);
  e.provenance = facts.at("provenance").get<std::string>();
  e.facts.hamiltonian = read_fact<bool>(facts, "hamiltonian");
  e.facts.face_degrees = read_degrees(facts);
  e.facts.certificate_modulus = read_fact<std::int64_t>(facts, "certificate_modulus");
  return e;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    for (const auto& raw : detail::raw_corpus()) out.push_back(load_entry(raw));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return out;
  }();
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  for (const CorpusEntry& e : corpus()) {
    if (e.name == name) return e;
  }
  throw UnknownCorpusEntry("unknown corpus entry '" + std::string(name) + "'");
}

std::string read_text_file(std::string_view path) {
  std::ifstream in{std::string(path), std::ios::binary};
  if (!in) throw std::runtime_error("cannot open '" + std::string(path) + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GraphSource load_graph_source(std::string_view source, std::string_view rotation_path) {
  GraphSource out;
  if (source.starts_with(kCorpusPrefix)) {
    const CorpusEntry& e = corpus_entry(source.substr(kCorpusPrefix.size()));
    out.graph = e.graph;
    out.rotation = e.rotation;
  } else {
    out.graph = parse_graph(read_text_file(source));
  }
  if (!rotation_path.empty()) out.rotation = parse_rotation(out.graph, read_text_file(rotation_path));
  return out;
}

}  // namespace hamplane
