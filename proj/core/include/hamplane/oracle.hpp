#ifndef HAMPLANE_ORACLE_HPP
#define HAMPLANE_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "hamplane/cycle_space.hpp"

namespace hamplane {

enum class OracleVerdict { hamiltonian, non_hamiltonian, unknown };
const char* to_string(OracleVerdict v);

struct OracleBudget {
  std::uint64_t max_nodes = std::uint64_t{1} << 34;
  double max_seconds = 60.0;
};

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::unknown;
  std::optional<Cycle> cycle;  // set iff hamiltonian
  std::uint64_t nodes = 0;     // search nodes expanded
};

// Backtracking over vertex sequences from vertex 0 with degree, forced-move
// and connectivity pruning. Budget exhaustion yields `unknown`, never a
// guess.
OracleResult hamiltonian_oracle(const Graph& g, const OracleBudget& budget = {});

}  // namespace hamplane

#endif  // HAMPLANE_ORACLE_HPP
