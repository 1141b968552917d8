#include <algorithm>

#include "hamplane/search.hpp"

namespace hamplane {

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::VE: return "VE";
    case PairClass::V0: return "V0";
    case PairClass::SingleVertex: return "SINGLE_VERTEX";
    case PairClass::Disjoint: return "DISJOINT";
    case PairClass::Other: return "OTHER";
  }
  return "?";
}

PairClass classify_pair(std::size_t shared_vertices, std::size_t shared_edges) {
  if (shared_vertices == 0) return PairClass::Disjoint;
  if (shared_vertices == 1) return PairClass::SingleVertex;
  if (shared_edges >= 1) return PairClass::VE;
  if (shared_vertices == 2) return PairClass::V0;
  return PairClass::Other;
}

bool PairClassification::joint_pairs_all_ve() const {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const PairEntry& p) { return p.cls == PairClass::VE || p.cls == PairClass::Disjoint; });
}

bool PairClassification::joint_pairs_ve_or_v0() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairEntry& p) {
    return p.cls == PairClass::VE || p.cls == PairClass::V0 || p.cls == PairClass::Disjoint;
  });
}

PairClassification classify_pairs(std::span<const Cycle> members) {
  std::vector<std::vector<VertexId>> sets;
  sets.reserve(members.size());
  for (const Cycle& c : members) {
    auto vs = c.vertices;
    std::sort(vs.begin(), vs.end());
    sets.push_back(std::move(vs));
  }
  PairClassification out;
  std::vector<VertexId> common;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      common.clear();
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(common));
      PairEntry p;
      p.i = i;
      p.j = j;
      p.shared_vertices = common.size();
      p.shared_edges = members[i].edges.shared_count(members[j].edges);
      p.cls = classify_pair(p.shared_vertices, p.shared_edges);
      ++out.counts[static_cast<std::size_t>(p.cls)];
      out.pairs.push_back(p);
    }
  }
  return out;
}

}  // namespace hamplane
