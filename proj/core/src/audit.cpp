#include <algorithm>

#include "hamplane/grinberg.hpp"

namespace hamplane {

AuditRecord audit_inclusion_exclusion(std::span<const Cycle> cycles, std::int64_t n) {
  AuditRecord rec;
  rec.n = n;
  rec.cycle_count = static_cast<std::int64_t>(cycles.size());

  std::vector<std::vector<VertexId>> sets;
  sets.reserve(cycles.size());
  VertexId top = 0;
  for (const Cycle& c : cycles) {
    auto vs = c.vertices;
    std::sort(vs.begin(), vs.end());
    if (!vs.empty()) top = std::max(top, vs.back());
    rec.vertex_sum += static_cast<std::int64_t>(vs.size());
    sets.push_back(std::move(vs));
  }

  std::vector<std::int64_t> multiplicity(cycles.empty() ? 0 : std::size_t{top} + 1, 0);
  for (const auto& vs : sets) {
    for (VertexId v : vs) ++multiplicity[v];
  }
  for (VertexId v = 0; v < multiplicity.size(); ++v) {
    if (multiplicity[v] > 0) ++rec.union_size;
    if (multiplicity[v] >= 3) rec.crowded_vertices.push_back(v);
    rec.max_multiplicity = std::max(rec.max_multiplicity, multiplicity[v]);
  }
  rec.triple_free = rec.crowded_vertices.empty();

  std::vector<VertexId> common;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      common.clear();
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      ++rec.joint_pairs;
      rec.pair_intersection_sum += static_cast<std::int64_t>(common.size());
      if (common.size() != 2) rec.irregular_pairs.emplace_back(i, j);
    }
  }

  rec.union_identity = n == rec.vertex_sum - rec.pair_intersection_sum;
  rec.pairs_all_two = rec.irregular_pairs.empty();
  rec.chain_count = rec.joint_pairs == rec.cycle_count - 1;
  for (const Cycle& c : cycles) rec.excess += static_cast<std::int64_t>(c.size()) - 2;
  rec.excess_identity = rec.excess == n - 2;
  return rec;
}

}  // namespace hamplane
