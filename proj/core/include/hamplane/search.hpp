#ifndef HAMPLANE_SEARCH_HPP
#define HAMPLANE_SEARCH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hamplane/cycle_space.hpp"
#include "hamplane/grinberg.hpp"

namespace hamplane {

// How two cycles meet, from (shared vertices, shared edges):
//   VE             >= 2 vertices and >= 1 edge
//   V0             exactly 2 vertices, no edge
//   SingleVertex   exactly 1 vertex
//   Disjoint       nothing shared
//   Other          >= 3 vertices with no edge
enum class PairClass { VE, V0, SingleVertex, Disjoint, Other };
inline constexpr std::size_t kPairClassCount = 5;
const char* to_string(PairClass c);
PairClass classify_pair(std::size_t shared_vertices, std::size_t shared_edges);

struct PairEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t shared_vertices = 0;
  std::size_t shared_edges = 0;
  PairClass cls = PairClass::Disjoint;
};

struct PairClassification {
  std::vector<PairEntry> pairs;  // (i, j) with i < j, lexicographic
  std::array<std::size_t, kPairClassCount> counts{};

  std::size_t count(PairClass c) const { return counts[static_cast<std::size_t>(c)]; }
  // Every joint (non-disjoint) pair is VE.
  bool joint_pairs_all_ve() const;
  // Every joint pair is VE or V0.
  bool joint_pairs_ve_or_v0() const;
};

PairClassification classify_pairs(std::span<const Cycle> members);

struct SearchBudget {
  std::uint64_t max_subsets = std::uint64_t{1} << 20;
  double max_seconds = 60.0;
  // Worker threads. Results are identical to a single-threaded run unless
  // the wall-clock limit cuts the search short.
  unsigned workers = 1;
};

// Exhaustive enumeration of every subset is attempted only up to this
// dimension.
inline constexpr std::size_t kDefaultDimLimit = 20;

enum class SearchStage { filtered, fallback };
const char* to_string(SearchStage s);

struct HamiltonPlane {
  std::vector<std::size_t> members;  // ascending basis indices
  Cycle sum;                         // the Hamiltonian cycle
  PairClassification pairs;
  std::int64_t excess = 0;           // sum (size - 2) over members
  bool grinberg_identity = false;    // excess == n - 2
  SearchStage found_by = SearchStage::filtered;
};

struct PlaneSearchResult {
  std::vector<HamiltonPlane> planes;  // lexicographic by member set
  std::uint64_t examined = 0;
  std::vector<SizeSolution> size_solutions;
  bool filtered_complete = false;     // every size-matching subset tested
  bool fallback_run = false;          // dimension within the exhaustive limit
  bool fallback_complete = false;
  bool truncated = false;             // some stage stopped on budget
  // No plane exists in any subset of the basis (requires the fallback).
  bool exhaustive() const { return fallback_complete; }
};

// Stage 1 solves the inside-face equation over the basis cycle sizes; stage 2
// tests every subset realizing a solution. When dim <= dim_limit every
// nonempty subset is then tested as well, so planes that do not satisfy the
// equation are still found.
PlaneSearchResult search_hamilton_plane(const CycleBasis& basis, const Graph& g, const SearchBudget& budget,
                                        std::size_t dim_limit = kDefaultDimLimit);

// Re-derives the sum, order and coverage of a plane from the basis.
bool verify_plane(const HamiltonPlane& plane, const CycleBasis& basis, const Graph& g);

enum class CounterexampleReason { sum_not_elementary, sum_order_below_n };
const char* to_string(CounterexampleReason r);

// A member set that satisfies the inside-face equation and covers every
// vertex, yet whose sum is not a Hamiltonian cycle.
struct CounterexampleReport {
  std::vector<std::size_t> members;
  SizeSolution solution;
  CounterexampleReason reason = CounterexampleReason::sum_not_elementary;
  PairClassification pairs;
};

struct CounterexampleSearchResult {
  std::vector<CounterexampleReport> reports;  // lexicographic by member set
  std::uint64_t examined = 0;
  bool truncated = false;
};

CounterexampleSearchResult find_equation_counterexample(const CycleBasis& basis, const Graph& g,
                                                        const SearchBudget& budget);

// Re-checks both halves: the equation holds with full coverage, and the sum
// fails for the stated reason.
bool replay(const CounterexampleReport& report, const CycleBasis& basis, const Graph& g);

// Counterexample hunt on the basis itself and then on each single-step
// transform (i, j) in lexicographic order, stopping at the first basis that
// yields any report.
struct CounterexampleHunt {
  std::optional<std::pair<std::size_t, std::size_t>> transform;  // nullopt: original basis
  CycleBasis basis;
  CounterexampleSearchResult result;
  std::size_t bases_tried = 0;
};

CounterexampleHunt hunt_counterexamples(const CycleBasis& basis, const Graph& g, const SearchBudget& budget);

class DimensionLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Every elementary cycle, found by walking all 2^dim - 1 nonzero basis
// combinations. Sorted by size, then vertex sequence. Throws
// DimensionLimitError when dim > dim_limit.
std::vector<Cycle> enumerate_all_cycles(const Graph& g, const CycleBasis& basis,
                                        std::size_t dim_limit = kDefaultDimLimit);

}  // namespace hamplane

#endif  // HAMPLANE_SEARCH_HPP
