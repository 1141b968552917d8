#ifndef HAMPLANE_CYCLE_SPACE_HPP
#define HAMPLANE_CYCLE_SPACE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hamplane/edge_vector.hpp"
#include "hamplane/graph.hpp"

namespace hamplane {

// An elementary cycle: every touched vertex has degree 2 and the support is
// connected. `vertices` starts at the smallest vertex and continues toward
// its smaller-labeled cycle neighbor, so equal cycles compare equal.
struct Cycle {
  EdgeVector edges;
  std::vector<VertexId> vertices;

  std::size_t size() const { return edges.count(); }
  std::size_t order() const { return vertices.size(); }

  friend bool operator==(const Cycle& a, const Cycle& b) { return a.edges == b.edges; }
};

// Returns the cycle when `v` is a nonempty, connected, 2-regular edge set.
std::optional<Cycle> as_elementary_cycle(const EdgeVector& v, const Graph& g);
inline bool is_elementary_cycle(const EdgeVector& v, const Graph& g) {
  return as_elementary_cycle(v, g).has_value();
}

// Reusable scratch space for the hot-path "is this a Hamiltonian cycle"
// test used by the subset searches.
class HamiltonChecker {
 public:
  explicit HamiltonChecker(const Graph& g);
  // True when v is an elementary cycle through all n vertices.
  bool is_hamiltonian(const EdgeVector& v);

 private:
  const Graph* g_;
  std::vector<unsigned> degree_;
  std::vector<EdgeId> first_, second_;
};

struct CycleBasis {
  std::vector<Cycle> cycles;
  // Tree edges for fundamental bases; empty for bases built another way.
  std::vector<EdgeId> tree_edges;

  std::size_t dimension() const { return cycles.size(); }
  std::vector<EdgeVector> vectors() const;
};

// Fundamental basis of the BFS tree rooted at vertex 0 (neighbors visited in
// ascending label order), one cycle per non-tree edge, ordered by that edge's
// id. A tree yields an empty basis.
CycleBasis fundamental_basis(const Graph& g);

// Faces of a sphere embedding with one face left out. For a 2-connected
// plane graph the remaining f - 1 = m - n + 1 face boundaries are a basis.
// Throws std::invalid_argument if the embedding is not spherical, the
// omitted index is out of range, or a kept face is not an elementary cycle.
CycleBasis face_basis(const Graph& g, const FaceTracing& faces, std::size_t omitted_face);

// Index of a face of maximum degree (lowest index on ties); the usual choice
// for the omitted outer face.
std::size_t largest_face(const FaceTracing& faces);

std::size_t gf2_rank(std::span<const EdgeVector> vectors);

class NotInSpanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solves for the unique index set S with XOR_{i in S} basis[i] == target by
// elimination with lowest-set-bit pivots. Build once, query many times.
class BasisRepresenter {
 public:
  explicit BasisRepresenter(const CycleBasis& basis);
  // Ascending indices; throws NotInSpanError when target is outside the span.
  std::vector<std::size_t> represent(const EdgeVector& target) const;
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    EdgeVector vec;
    EdgeVector combo;  // which basis elements XOR to vec
    std::size_t pivot;
  };
  std::size_t dim_ = 0;
  std::size_t length_ = 0;
  std::vector<Row> rows_;  // sorted by pivot
};

std::vector<std::size_t> represent_in_basis(const EdgeVector& target, const CycleBasis& basis);

class BasisTransformError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Replaces element i by basis[i] + basis[j]. Refused (BasisTransformError)
// when i == j, an index is out of range, or the sum is not elementary.
CycleBasis basis_transform(const CycleBasis& basis, std::size_t i, std::size_t j, const Graph& g);

}  // namespace hamplane

#endif  // HAMPLANE_CYCLE_SPACE_HPP
