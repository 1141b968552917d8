#include <algorithm>
#include <sstream>

#include "hamplane/graph.hpp"
#include "text_lines.hpp"

namespace hamplane {

RotationSystem RotationSystem::from_orders(const Graph& g, std::vector<std::vector<EdgeId>> orders) {
  const std::size_t n = g.vertex_count();
  if (orders.size() != n) {
    throw GraphError("rotation system lists " + std::to_string(orders.size()) + " vertices, graph has " +
                     std::to_string(n));
  }
  RotationSystem rot;
  rot.endpoints_.assign(g.edges().begin(), g.edges().end());
  rot.next_.assign(2 * g.edge_count(), 0);
  for (VertexId v = 0; v < n; ++v) {
    std::vector<EdgeId> got = orders[v];
    std::vector<EdgeId> want(g.incident(v).begin(), g.incident(v).end());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) {
      throw GraphError("rotation at vertex " + std::to_string(v) +
                       " is not a permutation of its incident edges");
    }
    const auto& ord = orders[v];
    for (std::size_t k = 0; k < ord.size(); ++k) {
      rot.next_[rot.dart(v, ord[k])] = ord[(k + 1) % ord.size()];
    }
  }
  rot.orders_ = std::move(orders);
  return rot;
}

RotationSystem parse_rotation(const Graph& g, std::string_view text) {
  std::vector<std::vector<EdgeId>> orders(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  for_each_data_line(text, [&](std::string_view line, std::size_t lineno) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw GraphError("expected 'v: e1 e2 ...'", lineno);
    const VertexId v = parse_label(trim(line.substr(0, colon)), lineno);
    if (v >= g.vertex_count()) throw GraphError("vertex " + std::to_string(v) + " out of range", lineno);
    if (seen[v]) throw GraphError("vertex " + std::to_string(v) + " listed twice", lineno);
    seen[v] = true;
    for (auto tok : split_tokens(line.substr(colon + 1))) {
      const EdgeId e = parse_label(tok, lineno);
      if (e >= g.edge_count()) throw GraphError("edge id " + std::to_string(e) + " out of range", lineno);
      orders[v].push_back(e);
    }
  });
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) throw GraphError("rotation system has no line for vertex " + std::to_string(v));
  }
  return RotationSystem::from_orders(g, std::move(orders));
}

std::string to_rotation_text(const Graph& g, const RotationSystem& rot) {
  std::ostringstream os;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << v << ':';
    for (EdgeId e : rot.order(v)) os << ' ' << e;
    os << '\n';
  }
  return os.str();
}

std::vector<VertexId> Face::vertices() const {
  std::vector<VertexId> out;
  out.reserve(boundary.size());
  for (const FaceStep& s : boundary) out.push_back(s.from);
  return out;
}

EdgeVector Face::edge_vector(std::size_t edge_count) const {
  EdgeVector v(edge_count);
  for (const FaceStep& s : boundary) v.flip(s.edge);
  return v;
}

FaceTracing trace_faces(const Graph& g, const RotationSystem& rot) {
  if (rot.vertex_count() != g.vertex_count()) throw GraphError("rotation system does not match graph");
  const std::size_t m = g.edge_count();
  // Dart 2e leaves edge e's smaller endpoint, 2e+1 its larger one.
  std::vector<bool> used(2 * m, false);
  FaceTracing out;
  for (std::size_t start = 0; start < 2 * m; ++start) {
    if (used[start]) continue;
    Face face;
    std::size_t d = start;
    do {
      if (used[d] || face.boundary.size() > 2 * m) throw GraphError("face tracing failed to close");
      used[d] = true;
      const EdgeId e = static_cast<EdgeId>(d / 2);
      const VertexId from = (d % 2 == 0) ? g.edge(e).u : g.edge(e).v;
      face.boundary.push_back({e, from});
      const VertexId to = g.other(e, from);
      const EdgeId next = rot.successor(to, e);
      d = 2 * std::size_t{next} + (g.edge(next).u == to ? 0 : 1);
    } while (d != start);
    out.faces.push_back(std::move(face));
  }
  out.euler_characteristic = static_cast<long>(g.vertex_count()) - static_cast<long>(m) +
                             static_cast<long>(out.faces.size());
  return out;
}

}  // namespace hamplane
