#include "hamplane/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "text_lines.hpp"

namespace hamplane {

namespace {

std::size_t line_of(std::span<const std::size_t> lines, std::size_t k) {
  return k < lines.size() ? lines[k] : 0;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges, std::span<const std::size_t> lines) {
  for (std::size_t k = 0; k < edges.size(); ++k) {
    Edge& e = edges[k];
    if (e.u == e.v) throw GraphError("loop edge at vertex " + std::to_string(e.u), line_of(lines, k));
    if (e.u >= n || e.v >= n) {
      throw GraphError("vertex label out of range 0.." + std::to_string(n == 0 ? 0 : n - 1),
                       line_of(lines, k));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }

  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Stable so that the later of two duplicates is the one reported.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (edges[order[k]] == edges[order[k - 1]]) {
      const Edge& e = edges[order[k]];
      throw GraphError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v),
                       line_of(lines, std::max(order[k], order[k - 1])));
    }
  }

  if (n < 3) throw GraphError("graph needs at least 3 vertices, got " + std::to_string(n));

  Graph g;
  g.n_ = n;
  g.edges_.reserve(edges.size());
  for (std::size_t k : order) g.edges_.push_back(edges[k]);

  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.incidence_.resize(2 * g.edges_.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < g.edges_.size(); ++id) {
    g.incidence_[fill[g.edges_[id].u]++] = id;
    g.incidence_[fill[g.edges_[id].v]++] = id;
  }
  for (VertexId v = 0; v < n; ++v) {
    auto first = g.incidence_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.incidence_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last, [&](EdgeId a, EdgeId b) { return g.other(a, v) < g.other(b, v); });
  }

  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.other(e, v);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) {
    VertexId missing = static_cast<VertexId>(std::find(seen.begin(), seen.end(), false) - seen.begin());
    throw GraphError("graph is disconnected: vertex " + std::to_string(missing) +
                     " is not reachable from vertex 0");
  }
  return g;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a > b) std::swap(a, b);
  Edge key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;

  for_each_data_line(text, [&](std::string_view line, std::size_t lineno) {
    auto tokens = split_tokens(line);
    if (tokens.size() != 2) {
      throw GraphError("expected two vertex labels, got " + std::to_string(tokens.size()) + " tokens",
                       lineno);
    }
    edges.push_back({parse_label(tokens[0], lineno), parse_label(tokens[1], lineno)});
    lines.push_back(lineno);
  });
  if (edges.empty()) throw GraphError("empty edge list");

  std::vector<VertexId> labels;
  labels.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    labels.push_back(e.u);
    labels.push_back(e.v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.back() + std::size_t{1} != labels.size()) {
    VertexId missing = 0;
    while (missing < labels.size() && labels[missing] == missing) ++missing;
    // Report the first line that mentions a label beyond the gap.
    std::size_t where = 0;
    for (std::size_t k = 0; k < edges.size() && where == 0; ++k) {
      if (edges[k].u > missing || edges[k].v > missing) where = lines[k];
    }
    throw GraphError("vertex labels must be contiguous from 0; label " + std::to_string(missing) +
                         " never appears",
                     where);
  }
  return Graph::from_edges(labels.size(), std::move(edges), lines);
}

Graph parse_graph(std::string_view text) {
  auto first = first_data_line(text);
  if (!first) throw GraphError("empty input");
  if (split_tokens(*first).size() == 1) return parse_graph6(text);
  return parse_edge_list(text);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

}  // namespace hamplane
