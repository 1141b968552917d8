#include "hamplane/cycle_space.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace hamplane {

std::optional<Cycle> as_elementary_cycle(const EdgeVector& v, const Graph& g) {
  if (v.size() != g.edge_count() || v.none()) return std::nullopt;
  const std::size_t n = g.vertex_count();
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> first(n, kNone), second(n, kNone);
  bool ok = true;
  v.for_each([&](EdgeId e) {
    for (VertexId x : {g.edge(e).u, g.edge(e).v}) {
      if (first[x] == kNone) {
        first[x] = e;
      } else if (second[x] == kNone) {
        second[x] = e;
      } else {
        ok = false;
      }
    }
  });
  if (!ok) return std::nullopt;

  VertexId start = static_cast<VertexId>(n);
  for (VertexId x = 0; x < n; ++x) {
    if (first[x] == kNone) continue;
    if (second[x] == kNone) return std::nullopt;
    if (start == n) start = x;
  }

  // Walk from the smallest vertex toward its smaller neighbor.
  EdgeId step = first[start];
  if (g.other(second[start], start) < g.other(first[start], start)) step = second[start];
  Cycle c;
  c.vertices.push_back(start);
  VertexId at = g.other(step, start);
  const std::size_t size = v.count();
  while (at != start) {
    if (c.vertices.size() > size) return std::nullopt;
    c.vertices.push_back(at);
    step = (first[at] == step) ? second[at] : first[at];
    at = g.other(step, at);
  }
  if (c.vertices.size() != size) return std::nullopt;  // support has another component
  c.edges = v;
  return c;
}

HamiltonChecker::HamiltonChecker(const Graph& g)
    : g_(&g), degree_(g.vertex_count()), first_(g.vertex_count()), second_(g.vertex_count()) {}

bool HamiltonChecker::is_hamiltonian(const EdgeVector& v) {
  const std::size_t n = g_->vertex_count();
  if (v.count() != n) return false;
  std::fill(degree_.begin(), degree_.end(), 0U);
  bool ok = true;
  v.for_each([&](EdgeId e) {
    if (!ok) return;
    for (VertexId x : {g_->edge(e).u, g_->edge(e).v}) {
      const unsigned d = degree_[x]++;
      if (d == 0) {
        first_[x] = e;
      } else if (d == 1) {
        second_[x] = e;
      } else {
        ok = false;
      }
    }
  });
  // n edges with every degree <= 2 forces every degree to be exactly 2.
  if (!ok) return false;
  EdgeId step = first_[0];
  VertexId at = g_->other(step, 0);
  std::size_t walked = 1;
  while (at != 0) {
    step = (first_[at] == step) ? second_[at] : first_[at];
    at = g_->other(step, at);
    ++walked;
  }
  return walked == n;
}

std::vector<EdgeVector> CycleBasis::vectors() const {
  std::vector<EdgeVector> out;
  out.reserve(cycles.size());
  for (const Cycle& c : cycles) out.push_back(c.edges);
  return out;
}

CycleBasis fundamental_basis(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr EdgeId kNone = static_cast<EdgeId>(-1);
  std::vector<EdgeId> parent_edge(n, kNone);
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> seen(n, false), is_tree(g.edge_count(), false);

  CycleBasis basis;
  std::queue<VertexId> queue;
  queue.push(0);
  seen[0] = true;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (EdgeId e : g.incident(v)) {  // ascending neighbor label
      const VertexId w = g.other(e, v);
      if (seen[w]) continue;
      seen[w] = true;
      parent_edge[w] = e;
      depth[w] = depth[v] + 1;
      is_tree[e] = true;
      basis.tree_edges.push_back(e);
      queue.push(w);
    }
  }
  std::sort(basis.tree_edges.begin(), basis.tree_edges.end());

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (is_tree[e]) continue;
    EdgeVector vec = g.empty_vector();
    vec.set(e);
    VertexId a = g.edge(e).u, b = g.edge(e).v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      vec.flip(parent_edge[a]);
      a = g.other(parent_edge[a], a);
    }
    auto cycle = as_elementary_cycle(vec, g);
    // A tree path plus its closing edge is always a simple cycle.
    basis.cycles.push_back(std::move(*cycle));
  }
  return basis;
}

std::size_t largest_face(const FaceTracing& faces) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < faces.faces.size(); ++k) {
    if (faces.faces[k].degree() > faces.faces[best].degree()) best = k;
  }
  return best;
}

CycleBasis face_basis(const Graph& g, const FaceTracing& faces, std::size_t omitted_face) {
  if (!faces.spherical()) {
    throw std::invalid_argument("face basis needs a sphere embedding (Euler characteristic " +
                                std::to_string(faces.euler_characteristic) + ")");
  }
  if (omitted_face >= faces.faces.size()) {
    throw std::invalid_argument("omitted face " + std::to_string(omitted_face) + " out of range");
  }
  CycleBasis basis;
  for (std::size_t k = 0; k < faces.faces.size(); ++k) {
    if (k == omitted_face) continue;
    auto cycle = as_elementary_cycle(faces.faces[k].edge_vector(g.edge_count()), g);
    if (!cycle) {
      throw std::invalid_argument("face " + std::to_string(k) +
                                  " is not bounded by an elementary cycle (graph not 2-connected?)");
    }
    basis.cycles.push_back(std::move(*cycle));
  }
  return basis;
}

std::size_t gf2_rank(std::span<const EdgeVector> vectors) {
  std::vector<EdgeVector> rows;
  for (EdgeVector v : vectors) {
    for (const EdgeVector& r : rows) {
      if (v.test(r.lowest())) v.xor_unchecked(r);
    }
    if (v.none()) continue;
    const std::size_t p = v.lowest();
    for (EdgeVector& r : rows) {
      if (r.test(p)) r.xor_unchecked(v);
    }
    rows.push_back(std::move(v));
  }
  return rows.size();
}

BasisRepresenter::BasisRepresenter(const CycleBasis& basis) : dim_(basis.dimension()) {
  if (dim_ == 0) return;
  length_ = basis.cycles.front().edges.size();
  for (std::size_t i = 0; i < dim_; ++i) {
    Row row{basis.cycles[i].edges, EdgeVector(dim_), 0};
    if (row.vec.size() != length_) throw std::invalid_argument("basis vectors differ in length");
    row.combo.set(i);
    for (const Row& r : rows_) {
      if (row.vec.test(r.pivot)) {
        row.vec.xor_unchecked(r.vec);
        row.combo.xor_unchecked(r.combo);
      }
    }
    if (row.vec.none()) {
      throw std::invalid_argument("basis element " + std::to_string(i) + " is linearly dependent");
    }
    row.pivot = row.vec.lowest();
    for (Row& r : rows_) {
      if (r.vec.test(row.pivot)) {
        r.vec.xor_unchecked(row.vec);
        r.combo.xor_unchecked(row.combo);
      }
    }
    auto at = std::lower_bound(rows_.begin(), rows_.end(), row.pivot,
                               [](const Row& r, std::size_t p) { return r.pivot < p; });
    rows_.insert(at, std::move(row));
  }
}

std::vector<std::size_t> BasisRepresenter::represent(const EdgeVector& target) const {
  if (target.none()) return {};
  if (dim_ == 0) throw NotInSpanError("target is not in the span of an empty basis");
  if (target.size() != length_) throw std::invalid_argument("target length does not match basis");
  EdgeVector rest = target;
  EdgeVector combo(dim_);
  // Rows are fully reduced, so each pivot is cleared exactly once.
  for (const Row& r : rows_) {
    if (rest.test(r.pivot)) {
      rest.xor_unchecked(r.vec);
      combo.xor_unchecked(r.combo);
    }
  }
  if (!rest.none()) {
    throw NotInSpanError("target is not in the cycle space spanned by the basis (residual edge " +
                         std::to_string(rest.lowest()) + ")");
  }
  std::vector<std::size_t> out;
  combo.for_each([&](EdgeId i) { out.push_back(i); });
  return out;
}

std::vector<std::size_t> represent_in_basis(const EdgeVector& target, const CycleBasis& basis) {
  return BasisRepresenter(basis).represent(target);
}

CycleBasis basis_transform(const CycleBasis& basis, std::size_t i, std::size_t j, const Graph& g) {
  if (i == j) throw BasisTransformError("basis transform needs two distinct indices");
  if (i >= basis.dimension() || j >= basis.dimension()) {
    throw BasisTransformError("basis index out of range");
  }
  auto sum = as_elementary_cycle(basis.cycles[i].edges ^ basis.cycles[j].edges, g);
  if (!sum) {
    throw BasisTransformError("sum of basis elements " + std::to_string(i) + " and " + std::to_string(j) +
                              " is not an elementary cycle");
  }
  CycleBasis out;
  out.cycles = basis.cycles;
  out.cycles[i] = std::move(*sum);
  return out;
}

}  // namespace hamplane
