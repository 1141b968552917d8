#include <algorithm>
#include <set>

#include "hamplane/search.hpp"
#include "subset_space.hpp"

namespace hamplane {

using detail::Deadline;
using detail::FilteredSpace;
using detail::GraySpace;
using detail::RangeOutcome;

const char* to_string(SearchStage s) { return s == SearchStage::filtered ? "filtered" : "fallback"; }

const char* to_string(CounterexampleReason r) {
  return r == CounterexampleReason::sum_not_elementary ? "sum_not_elementary" : "sum_order_below_n";
}

namespace {

constexpr std::uint64_t kClockStride = 1024;

// Vertex sets of basis cycles as bit rows, for coverage tests.
class CoverageTable {
 public:
  CoverageTable(const CycleBasis& basis, std::size_t n) : words_((n + 63) / 64), n_(n) {
    bits_.resize(basis.dimension() * words_, 0);
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
      for (VertexId v : basis.cycles[i].vertices) bits_[i * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }

  bool covers(const std::vector<std::size_t>& members, std::vector<std::uint64_t>& scratch) const {
    scratch.assign(words_, 0);
    for (std::size_t i : members) {
      for (std::size_t k = 0; k < words_; ++k) scratch[k] |= bits_[i * words_ + k];
    }
    std::size_t covered = 0;
    for (auto w : scratch) covered += static_cast<std::size_t>(std::popcount(w));
    return covered == n_;
  }

 private:
  std::size_t words_;
  std::size_t n_;
  std::vector<std::uint64_t> bits_;
};

struct Hit {
  std::vector<std::size_t> members;
  std::size_t solution = 0;
  CounterexampleReason reason = CounterexampleReason::sum_not_elementary;
};

bool stop_requested(std::uint64_t step, std::atomic<bool>& stop, const Deadline& deadline) {
  if (step % kClockStride != 0) return stop.load(std::memory_order_relaxed);
  if (deadline.expired()) stop.store(true, std::memory_order_relaxed);
  return stop.load(std::memory_order_relaxed);
}

// Runs `test` on each of the first `limit` subsets of a FilteredSpace.
// test(sum, members_fn, solution, hits) appends to hits.
template <typename Test>
RangeOutcome scan_filtered(const FilteredSpace& space, const CycleBasis& basis, std::uint64_t limit,
                           unsigned workers, const Deadline& deadline, std::vector<Hit>& hits_out,
                           Test make_test) {
  const std::uint64_t count = std::min(space.size(), limit);
  std::vector<std::vector<Hit>> hits(std::max(1U, workers));
  const std::size_t length = basis.dimension() == 0 ? 0 : basis.cycles.front().edges.size();
  auto outcome = detail::run_ranges(count, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi,
                                                         std::atomic<bool>& stop) {
    RangeOutcome out;
    if (lo >= hi) return out;
    auto test = make_test();
    FilteredSpace::Cursor cursor(space, lo);
    std::vector<std::size_t> members;
    EdgeVector sum(length);
    for (std::uint64_t t = lo; t < hi; ++t) {
      if (stop_requested(t - lo, stop, deadline)) {
        out.stopped = true;
        break;
      }
      cursor.members(members);
      sum = basis.cycles[members.front()].edges;
      for (std::size_t k = 1; k < members.size(); ++k) sum.xor_unchecked(basis.cycles[members[k]].edges);
      test(sum, members, cursor.solution(), hits[w]);
      ++out.examined;
      cursor.advance();
    }
    return out;
  });
  for (auto& h : hits) std::move(h.begin(), h.end(), std::back_inserter(hits_out));
  return outcome;
}

RangeOutcome scan_gray(const CycleBasis& basis, const Graph& g, std::uint64_t limit, unsigned workers,
                       const Deadline& deadline, std::vector<std::vector<std::size_t>>& found) {
  const GraySpace space(basis.dimension());
  const std::uint64_t count = std::min(space.size(), limit);
  std::vector<std::vector<std::vector<std::size_t>>> hits(std::max(1U, workers));
  auto outcome = detail::run_ranges(count, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi,
                                                         std::atomic<bool>& stop) {
    RangeOutcome out;
    if (lo >= hi) return out;
    HamiltonChecker checker(g);
    const std::size_t n = g.vertex_count();
    std::uint64_t mask = GraySpace::gray(lo + 1);
    EdgeVector sum = g.empty_vector();
    for (std::size_t i = 0; i < basis.dimension(); ++i) {
      if ((mask >> i) & 1U) sum.xor_unchecked(basis.cycles[i].edges);
    }
    for (std::uint64_t t = lo;;) {
      if (stop_requested(t - lo, stop, deadline)) {
        out.stopped = true;
        break;
      }
      ++out.examined;
      if (sum.count() == n && checker.is_hamiltonian(sum)) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < basis.dimension(); ++i) {
          if ((mask >> i) & 1U) members.push_back(i);
        }
        hits[w].push_back(std::move(members));
      }
      if (++t == hi) break;
      const auto flip = static_cast<std::size_t>(std::countr_zero(t + 1));
      mask ^= std::uint64_t{1} << flip;
      sum.xor_unchecked(basis.cycles[flip].edges);
    }
    return out;
  });
  for (auto& h : hits) std::move(h.begin(), h.end(), std::back_inserter(found));
  return outcome;
}

std::vector<Cycle> member_cycles(const CycleBasis& basis, const std::vector<std::size_t>& members) {
  std::vector<Cycle> out;
  out.reserve(members.size());
  for (std::size_t i : members) out.push_back(basis.cycles[i]);
  return out;
}

std::int64_t member_excess(const CycleBasis& basis, const std::vector<std::size_t>& members) {
  std::int64_t total = 0;
  for (std::size_t i : members) total += static_cast<std::int64_t>(basis.cycles[i].size()) - 2;
  return total;
}

CounterexampleSearchResult counterexamples_within(const CycleBasis& basis, const Graph& g,
                                                  const SearchBudget& budget, const Deadline& deadline) {
  CounterexampleSearchResult result;
  const auto solutions = solve_inside(cycle_sizes(basis), static_cast<std::int64_t>(g.vertex_count()));
  const FilteredSpace space(basis, solutions);
  const CoverageTable coverage(basis, g.vertex_count());
  std::vector<Hit> hits;
  auto outcome = scan_filtered(space, basis, budget.max_subsets, budget.workers, deadline, hits, [&] {
    return [&, checker = HamiltonChecker(g), scratch = std::vector<std::uint64_t>()](
               const EdgeVector& sum, const std::vector<std::size_t>& members, std::size_t solution,
               std::vector<Hit>& out) mutable {
      if (!coverage.covers(members, scratch)) return;
      if (sum.count() == g.vertex_count() && checker.is_hamiltonian(sum)) return;
      Hit h{members, solution, CounterexampleReason::sum_not_elementary};
      if (is_elementary_cycle(sum, g)) h.reason = CounterexampleReason::sum_order_below_n;
      out.push_back(std::move(h));
    };
  });
  result.examined = outcome.examined;
  result.truncated = outcome.stopped || space.size() > budget.max_subsets;
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.members < b.members; });
  for (Hit& h : hits) {
    CounterexampleReport r;
    r.members = std::move(h.members);
    r.solution = solutions[h.solution];
    r.reason = h.reason;
    r.pairs = classify_pairs(member_cycles(basis, r.members));
    result.reports.push_back(std::move(r));
  }
  return result;
}

}  // namespace

PlaneSearchResult search_hamilton_plane(const CycleBasis& basis, const Graph& g, const SearchBudget& budget,
                                        std::size_t dim_limit) {
  const Deadline deadline(budget.max_seconds);
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  PlaneSearchResult result;
  result.size_solutions = solve_inside(cycle_sizes(basis), n);

  // Stage 2: subsets realizing a size solution.
  const FilteredSpace space(basis, result.size_solutions);
  std::vector<Hit> hits;
  auto filtered = scan_filtered(space, basis, budget.max_subsets, budget.workers, deadline, hits, [&] {
    return [checker = HamiltonChecker(g), n](const EdgeVector& sum, const std::vector<std::size_t>& members,
                                            std::size_t solution, std::vector<Hit>& out) mutable {
      if (static_cast<std::int64_t>(sum.count()) == n && checker.is_hamiltonian(sum)) {
        out.push_back({members, solution, {}});
      }
    };
  });
  result.examined = filtered.examined;
  result.filtered_complete = !filtered.stopped && space.size() <= budget.max_subsets;
  result.truncated = !result.filtered_complete;

  std::set<std::vector<std::size_t>> from_filter;
  for (const Hit& h : hits) from_filter.insert(h.members);

  // Fallback: every nonzero subset.
  std::vector<std::vector<std::size_t>> from_fallback;
  const std::size_t limit = std::min<std::size_t>(dim_limit, 62);
  if (basis.dimension() <= limit) {
    result.fallback_run = true;
    const GraySpace all(basis.dimension());
    const std::uint64_t remaining = budget.max_subsets - std::min(budget.max_subsets, result.examined);
    auto fallback = scan_gray(basis, g, remaining, budget.workers, deadline, from_fallback);
    result.examined += fallback.examined;
    result.fallback_complete = !fallback.stopped && all.size() <= remaining;
    if (!result.fallback_complete) result.truncated = true;
  }

  std::set<std::vector<std::size_t>> all_sets(from_filter.begin(), from_filter.end());
  all_sets.insert(from_fallback.begin(), from_fallback.end());
  for (const auto& members : all_sets) {
    HamiltonPlane plane;
    plane.members = members;
    EdgeVector sum = g.empty_vector();
    for (std::size_t i : members) sum.xor_unchecked(basis.cycles[i].edges);
    plane.sum = *as_elementary_cycle(sum, g);
    plane.pairs = classify_pairs(member_cycles(basis, members));
    plane.excess = member_excess(basis, members);
    plane.grinberg_identity = plane.excess == n - 2;
    plane.found_by = from_filter.contains(members) ? SearchStage::filtered : SearchStage::fallback;
    result.planes.push_back(std::move(plane));
  }
  return result;
}

bool verify_plane(const HamiltonPlane& plane, const CycleBasis& basis, const Graph& g) {
  if (plane.members.empty()) return false;
  EdgeVector sum = g.empty_vector();
  std::vector<bool> covered(g.vertex_count(), false);
  for (std::size_t i : plane.members) {
    if (i >= basis.dimension()) return false;
    sum ^= basis.cycles[i].edges;
    for (VertexId v : basis.cycles[i].vertices) covered[v] = true;
  }
  if (sum != plane.sum.edges) return false;
  auto cycle = as_elementary_cycle(sum, g);
  if (!cycle || cycle->order() != g.vertex_count()) return false;
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

CounterexampleSearchResult find_equation_counterexample(const CycleBasis& basis, const Graph& g,
                                                        const SearchBudget& budget) {
  return counterexamples_within(basis, g, budget, Deadline(budget.max_seconds));
}

bool replay(const CounterexampleReport& report, const CycleBasis& basis, const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  DegreeCounts sizes;
  std::vector<bool> covered(g.vertex_count(), false);
  EdgeVector sum = g.empty_vector();
  std::set<std::size_t> distinct(report.members.begin(), report.members.end());
  if (distinct.size() != report.members.size() || distinct.empty()) return false;
  for (std::size_t i : report.members) {
    if (i >= basis.dimension()) return false;
    ++sizes[static_cast<std::int64_t>(basis.cycles[i].size())];
    sum ^= basis.cycles[i].edges;
    for (VertexId v : basis.cycles[i].vertices) covered[v] = true;
  }
  if (sizes != report.solution.counts || weighted_excess(sizes) != n - 2) return false;
  if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) return false;
  auto cycle = as_elementary_cycle(sum, g);
  if (report.reason == CounterexampleReason::sum_not_elementary) return !cycle.has_value();
  return cycle.has_value() && cycle->order() < g.vertex_count();
}

CounterexampleHunt hunt_counterexamples(const CycleBasis& basis, const Graph& g, const SearchBudget& budget) {
  const Deadline deadline(budget.max_seconds);
  CounterexampleHunt hunt;
  hunt.basis = basis;
  hunt.result = counterexamples_within(basis, g, budget, deadline);
  hunt.bases_tried = 1;
  if (!hunt.result.reports.empty() || hunt.result.truncated) return hunt;

  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    for (std::size_t j = 0; j < basis.dimension(); ++j) {
      if (i == j) continue;
      if (deadline.expired()) {
        hunt.result.truncated = true;
        return hunt;
      }
      CycleBasis transformed;
      try {
        transformed = basis_transform(basis, i, j, g);
      } catch (const BasisTransformError&) {
        continue;
      }
      ++hunt.bases_tried;
      auto result = counterexamples_within(transformed, g, budget, deadline);
      hunt.result.examined += result.examined;
      if (result.truncated) {
        hunt.result.truncated = true;
        return hunt;
      }
      if (!result.reports.empty()) {
        hunt.transform = std::make_pair(i, j);
        hunt.basis = std::move(transformed);
        hunt.result.reports = std::move(result.reports);
        return hunt;
      }
    }
  }
  return hunt;
}

std::vector<Cycle> enumerate_all_cycles(const Graph& g, const CycleBasis& basis, std::size_t dim_limit) {
  if (basis.dimension() > std::min<std::size_t>(dim_limit, 62)) {
    throw DimensionLimitError("cycle space dimension " + std::to_string(basis.dimension()) +
                              " exceeds the enumeration limit " + std::to_string(dim_limit));
  }
  std::vector<Cycle> out;
  const std::uint64_t count = GraySpace(basis.dimension()).size();
  EdgeVector sum = g.empty_vector();
  for (std::uint64_t t = 1; t <= count; ++t) {
    sum.xor_unchecked(basis.cycles[static_cast<std::size_t>(std::countr_zero(t))].edges);
    if (auto c = as_elementary_cycle(sum, g)) out.push_back(std::move(*c));
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.vertices < b.vertices;
  });
  return out;
}

}  // namespace hamplane
