#include "hamplane/oracle.hpp"

#include "subset_space.hpp"

namespace hamplane {

const char* to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::hamiltonian: return "hamiltonian";
    case OracleVerdict::non_hamiltonian: return "non_hamiltonian";
    case OracleVerdict::unknown: return "unknown";
  }
  return "?";
}

namespace {

constexpr VertexId kStart = 0;

// Path grows from vertex 0. For an unvisited vertex x, avail_[x] counts the
// neighbors that may still become its cycle neighbors: unvisited ones, the
// head, and the start.
class Backtracker {
 public:
  Backtracker(const Graph& g, const OracleBudget& budget)
      : g_(g), budget_(budget), deadline_(budget.max_seconds), n_(g.vertex_count()),
        visited_(n_, false), avail_(n_, 0), queue_(n_), mark_(n_, 0) {
    for (VertexId v = 0; v < n_; ++v) avail_[v] = static_cast<unsigned>(g.degree(v));
    visited_[kStart] = true;
    start_free_ = static_cast<unsigned>(g.degree(kStart));
    path_.push_back(kStart);
  }

  OracleResult run() {
    OracleResult out;
    bool found = false;
    if (feasible_start()) found = extend();
    out.nodes = nodes_;
    if (found) {
      out.verdict = OracleVerdict::hamiltonian;
      EdgeVector cycle = g_.empty_vector();
      for (std::size_t i = 0; i < n_; ++i) cycle.set(*g_.find_edge(path_[i], path_[(i + 1) % n_]));
      out.cycle = as_elementary_cycle(cycle, g_);
    } else {
      out.verdict = aborted_ ? OracleVerdict::unknown : OracleVerdict::non_hamiltonian;
    }
    return out;
  }

 private:
  bool feasible_start() const {
    for (VertexId v = 0; v < n_; ++v) {
      if (g_.degree(v) < 2) return false;
    }
    return true;
  }

  bool out_of_budget() {
    if (++nodes_ > budget_.max_nodes) aborted_ = true;
    if (nodes_ % 4096 == 0 && deadline_.expired()) aborted_ = true;
    return aborted_;
  }

  // Unvisited vertices must stay connected to the head.
  bool connected(VertexId head) {
    const std::size_t unvisited = n_ - path_.size();
    if (unvisited == 0) return true;
    ++stamp_;
    std::size_t lo = 0, hi = 0, reached = 0;
    queue_[hi++] = head;
    mark_[head] = stamp_;
    while (lo < hi) {
      const VertexId v = queue_[lo++];
      for (EdgeId e : g_.incident(v)) {
        const VertexId x = g_.other(e, v);
        if (visited_[x] || mark_[x] == stamp_) continue;
        mark_[x] = stamp_;
        queue_[hi++] = x;
        ++reached;
      }
    }
    return reached == unvisited;
  }

  bool extend() {
    if (out_of_budget()) return false;
    const VertexId head = path_.back();
    if (path_.size() == n_) return g_.find_edge(head, kStart).has_value();

    // A neighbor with only two options left, one being the head, must be next.
    VertexId forced = static_cast<VertexId>(n_);
    for (EdgeId e : g_.incident(head)) {
      const VertexId x = g_.other(e, head);
      if (visited_[x] || avail_[x] != 2 || head == kStart) continue;
      if (forced != n_) return false;
      forced = x;
    }

    for (EdgeId e : g_.incident(head)) {
      const VertexId w = g_.other(e, head);
      if (visited_[w] || (forced != n_ && w != forced)) continue;
      if (step(head, w)) return true;
      if (aborted_) return false;
    }
    return false;
  }

  bool step(VertexId head, VertexId w) {
    visited_[w] = true;
    path_.push_back(w);
    const bool near_start = g_.find_edge(w, kStart).has_value();
    if (near_start) --start_free_;
    bool ok = path_.size() == n_ || start_free_ > 0;
    if (head != kStart) {
      for (EdgeId e : g_.incident(head)) {
        const VertexId x = g_.other(e, head);
        if (visited_[x]) continue;
        if (--avail_[x] < 2) ok = false;
      }
    }
    bool found = ok && connected(w) && extend();
    if (found) return true;
    if (head != kStart) {
      for (EdgeId e : g_.incident(head)) {
        const VertexId x = g_.other(e, head);
        if (!visited_[x]) ++avail_[x];
      }
    }
    if (near_start) ++start_free_;
    path_.pop_back();
    visited_[w] = false;
    return false;
  }

  const Graph& g_;
  OracleBudget budget_;
  detail::Deadline deadline_;
  std::size_t n_;
  std::vector<bool> visited_;
  std::vector<unsigned> avail_;
  std::vector<VertexId> path_;
  std::vector<VertexId> queue_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  unsigned start_free_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

OracleResult hamiltonian_oracle(const Graph& g, const OracleBudget& budget) {
  return Backtracker(g, budget).run();
}

}  // namespace hamplane
