#ifndef HAMPLANE_GRAPH_HPP
#define HAMPLANE_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hamplane/edge_vector.hpp"

namespace hamplane {

struct Edge {
  VertexId u;
  VertexId v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Input or validation failure. line() is the 1-based input line the problem
// was found on, or 0 when the problem is global (e.g. a disconnected graph).
class GraphError : public std::runtime_error {
 public:
  GraphError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Simple connected undirected graph on vertices 0..n-1 with n >= 3.
//
// Edges are stored as (u, v) with u < v, sorted lexicographically; edge id i
// is the position in that order, so ids depend only on the edge set.
class Graph {
 public:
  // Validates and canonicalizes. `lines`, when non-empty, gives the input line
  // of each edge and is used only for error messages.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges,
                          std::span<const std::size_t> lines = {});

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  // m - n + 1 for a connected graph.
  std::size_t cycle_space_dimension() const { return edges_.size() - n_ + 1; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  // Incident edge ids of v in ascending order of the opposite endpoint.
  std::span<const EdgeId> incident(VertexId v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  VertexId other(EdgeId e, VertexId v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  EdgeVector empty_vector() const { return EdgeVector(edges_.size()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeId> incidence_;
};

// Lines of "u v"; '#' starts a comment; blank lines are ignored.
Graph parse_edge_list(std::string_view text);

// One graph6 record (an optional ">>graph6<<" header is accepted).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Dispatches on content: a single token on the first data line is graph6,
// anything else is an edge list.
Graph parse_graph(std::string_view text);

std::string to_edge_list(const Graph& g);

// Cyclic order of incident edge ids around each vertex.
class RotationSystem {
 public:
  // Throws GraphError unless each order is a permutation of incident(v).
  static RotationSystem from_orders(const Graph& g, std::vector<std::vector<EdgeId>> orders);

  std::span<const EdgeId> order(VertexId v) const { return orders_[v]; }
  // Edge following e in v's cyclic order; e must be incident to v.
  EdgeId successor(VertexId v, EdgeId e) const { return next_[dart(v, e)]; }
  std::size_t vertex_count() const { return orders_.size(); }

 private:
  std::size_t dart(VertexId v, EdgeId e) const { return 2 * std::size_t{e} + (endpoints_[e].u == v ? 0 : 1); }

  std::vector<std::vector<EdgeId>> orders_;
  std::vector<Edge> endpoints_;
  // Indexed by dart 2e (at the smaller endpoint) or 2e+1 (at the larger).
  std::vector<EdgeId> next_;
};

// "v: e1 e2 e3 ..." per vertex; '#' comments and blank lines ignored.
RotationSystem parse_rotation(const Graph& g, std::string_view text);
std::string to_rotation_text(const Graph& g, const RotationSystem& rot);

struct FaceStep {
  EdgeId edge;
  VertexId from;  // tail of the step
};

struct Face {
  std::vector<FaceStep> boundary;
  std::size_t degree() const { return boundary.size(); }
  std::vector<VertexId> vertices() const;
  EdgeVector edge_vector(std::size_t edge_count) const;
};

struct FaceTracing {
  std::vector<Face> faces;
  // n - m + f; equals 2 exactly for a sphere embedding of a connected graph.
  long euler_characteristic = 0;
  bool spherical() const { return euler_characteristic == 2; }
};

// Traces faces by following directed edge (u, v) and leaving v along the
// successor of (v, u) in v's rotation. Every directed edge is used once.
FaceTracing trace_faces(const Graph& g, const RotationSystem& rot);

}  // namespace hamplane

#endif  // HAMPLANE_GRAPH_HPP
