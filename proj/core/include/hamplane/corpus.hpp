#ifndef HAMPLANE_CORPUS_HPP
#define HAMPLANE_CORPUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamplane/graph.hpp"
#include "hamplane/grinberg.hpp"

namespace hamplane {

// A recorded fact plus the toolkit routine that re-derives it.
template <typename T>
struct KnownFact {
  T value{};
  std::string derived_by;
};

struct CorpusFacts {
  std::optional<KnownFact<bool>> hamiltonian;
  std::optional<KnownFact<DegreeCounts>> face_degrees;        // needs a rotation
  std::optional<KnownFact<std::int64_t>> certificate_modulus;  // needs a rotation
};

struct CorpusEntry {
  std::string name;
  std::string provenance;
  Graph graph;
  std::optional<RotationSystem> rotation;
  CorpusFacts facts;
  std::string edges_text;
  std::string rotation_text;  // empty when no rotation ships
};

class UnknownCorpusEntry : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parsed once on first use; sorted by name.
const std::vector<CorpusEntry>& corpus();
// Throws UnknownCorpusEntry.
const CorpusEntry& corpus_entry(std::string_view name);

struct GraphSource {
  Graph graph;
  std::optional<RotationSystem> rotation;
};

inline constexpr std::string_view kCorpusPrefix = "corpus:";

// "corpus:<name>" or a file path. For a path, `rotation_path` (if nonempty)
// is parsed against the graph; for a corpus name the shipped rotation is used
// unless `rotation_path` overrides it. Throws GraphError, UnknownCorpusEntry,
// or std::runtime_error for unreadable files.
GraphSource load_graph_source(std::string_view source, std::string_view rotation_path = {});

std::string read_text_file(std::string_view path);

}  // namespace hamplane

#endif  // HAMPLANE_CORPUS_HPP
