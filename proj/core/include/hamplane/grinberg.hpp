#ifndef HAMPLANE_GRINBERG_HPP
#define HAMPLANE_GRINBERG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamplane/cycle_space.hpp"

namespace hamplane {

// degree i -> multiplicity. Degrees are >= 3, multiplicities >= 0.
using DegreeCounts = std::map<std::int64_t, std::int64_t>;

DegreeCounts face_degrees(const FaceTracing& faces);
DegreeCounts cycle_sizes(const CycleBasis& basis);

struct FacePartition {
  DegreeCounts inside;
  DegreeCounts outside;
  std::int64_t n = 0;
};

// The inside-face condition sum (i-2) f'_i = n - 2 and the full condition
// sum (i-2)(f'_i - f''_i) = 0, both evaluated exactly.
struct GrinbergReport {
  std::int64_t lhs_full = 0;
  std::int64_t lhs_inside = 0;
  std::int64_t rhs_inside = 0;
  bool satisfied_full = false;
  bool satisfied_inside = false;
};

// Throws std::invalid_argument on degrees < 3 or negative multiplicities,
// std::overflow_error if an intermediate leaves int64 range.
GrinbergReport eval_full(const FacePartition& p);

// Chosen count x_i per size; only nonzero counts are stored.
struct SizeSolution {
  DegreeCounts counts;
  friend bool operator==(const SizeSolution&, const SizeSolution&) = default;
};

std::int64_t weighted_excess(const DegreeCounts& counts);  // sum (i-2) x_i

// Every x with 0 <= x_i <= available[i] and sum (i-2) x_i = n - 2, from a
// bounded-knapsack walk over distinct sizes in ascending order; for each size
// larger counts are tried first. Empty result means infeasible.
std::vector<SizeSolution> solve_inside(const DegreeCounts& available, std::int64_t n);

enum class GrinbergForm { full, inside };
const char* to_string(GrinbergForm form);

struct ResidueRow {
  std::int64_t degree = 0;
  std::int64_t multiplicity = 0;
  std::int64_t coefficient = 0;  // (degree - 2) mod M
  // Residues mod M the row's term can take over its whole count range.
  std::vector<std::int64_t> attainable;
};

// No assignment satisfies the chosen form modulo `modulus`.
//   full:   sum (i-2)(2 f'_i - a_i) == 0      (mod M), 0 <= f'_i <= a_i
//   inside: sum (i-2) x_i           == n - 2  (mod M), 0 <= x_i  <= a_i
struct ModularCertificate {
  std::int64_t modulus = 0;
  GrinbergForm form = GrinbergForm::full;
  std::int64_t n = 0;
  std::int64_t target_residue = 0;
  std::vector<ResidueRow> rows;
  std::vector<std::int64_t> attainable_totals;  // target is not among them
  std::string congruence;
};

inline constexpr std::int64_t kDefaultModuli[] = {2, 3, 5, 7};

// Tries moduli in the given order; for each, the full form first and then the
// inside form. Returns the first obstruction, or nullopt.
std::optional<ModularCertificate> modular_obstruction(const DegreeCounts& available, std::int64_t n,
                                                      std::span<const std::int64_t> moduli = kDefaultModuli);

// Rebuilds the residue domain from (degree, multiplicity) alone and exhausts
// every residue tuple. True iff none satisfies the stated congruence.
bool replay(const ModularCertificate& cert);

// Inclusion-exclusion bookkeeping over the vertex sets of a cycle family.
struct AuditRecord {
  std::int64_t n = 0;
  std::int64_t cycle_count = 0;
  std::int64_t union_size = 0;               // |U V_i|
  std::int64_t vertex_sum = 0;               // sum |V_i|
  std::int64_t joint_pairs = 0;              // pairs with |V_i n V_j| >= 1
  std::int64_t pair_intersection_sum = 0;    // sum over joint pairs of |V_i n V_j|
  std::int64_t max_multiplicity = 0;         // most cycles sharing one vertex
  bool triple_free = false;                  // no vertex in >= 3 cycles
  std::vector<VertexId> crowded_vertices;    // vertices in >= 3 cycles
  // Joint pairs (i, j) whose vertex intersection is not exactly 2.
  std::vector<std::pair<std::size_t, std::size_t>> irregular_pairs;

  // n = sum |V_i| - sum |V_i n V_j|; only meaningful when triple_free.
  bool union_identity = false;
  // Every joint pair meets in exactly 2 vertices and there are k - 1 of them.
  bool pairs_all_two = false;
  bool chain_count = false;
  // sum (size_i - 2) = n - 2.
  std::int64_t excess = 0;
  bool excess_identity = false;

  bool union_check_passes() const { return triple_free && union_identity; }
  bool pair_check_passes() const { return pairs_all_two && chain_count; }
  bool passes() const { return union_check_passes() && pair_check_passes() && excess_identity; }
};

AuditRecord audit_inclusion_exclusion(std::span<const Cycle> cycles, std::int64_t n);

}  // namespace hamplane

#endif  // HAMPLANE_GRINBERG_HPP
