#include <doctest.h>

#include <limits>

#include "hamplane/search.hpp"
#include "support/test_support.hpp"

using namespace hamplane;
using namespace hamplane::testing;

namespace {

DegreeCounts random_counts(Rng& rng, int max_kinds, std::int64_t max_mult) {
  DegreeCounts out;
  const int kinds = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_kinds));
  for (int k = 0; k < kinds; ++k) {
    out[3 + static_cast<std::int64_t>(rng() % 7)] = 1 + static_cast<std::int64_t>(rng() % max_mult);
  }
  return out;
}

std::vector<DegreeCounts> as_counts(const std::vector<SizeSolution>& sols) {
  std::vector<DegreeCounts> out;
  for (const auto& s : sols) out.push_back(s.counts);
  return out;
}

}  // namespace

TEST_CASE("eval_full: examples") {
  const GrinbergReport square = eval_full({{{4, 1}}, {{4, 1}}, 4});
  CHECK(square.lhs_full == 0);
  CHECK(square.satisfied_full);
  CHECK(square.lhs_inside == 2);
  CHECK(square.rhs_inside == 2);
  CHECK(square.satisfied_inside);

  const GrinbergReport chorded = eval_full({{{3, 2}}, {{4, 1}}, 4});
  CHECK(chorded.lhs_inside == 2);
  CHECK(chorded.lhs_full == 0);
  CHECK(chorded.satisfied_full);
  CHECK(chorded.satisfied_inside);

  const GrinbergReport herschel = eval_full({{{4, 4}}, {{4, 5}}, 11});
  CHECK(herschel.lhs_full == -2);
  CHECK_FALSE(herschel.satisfied_full);
  CHECK(herschel.lhs_inside == 8);
  CHECK_FALSE(herschel.satisfied_inside);
  for (std::int64_t inside = 0; inside <= 9; ++inside) {
    CHECK_FALSE(eval_full({{{4, inside}}, {{4, 9 - inside}}, 11}).satisfied_full);
  }
}

TEST_CASE("eval_full: validation and overflow") {
  CHECK_THROWS_AS(eval_full({{{2, 1}}, {}, 4}), std::invalid_argument);
  CHECK_THROWS_AS(eval_full({{{3, -1}}, {}, 4}), std::invalid_argument);
  const std::int64_t huge = std::numeric_limits<std::int64_t>::max() / 2;
  CHECK_THROWS_AS(eval_full({{{5, huge}}, {}, 4}), std::overflow_error);
  CHECK_THROWS_AS(solve_inside({{5, huge}}, huge), std::overflow_error);
}

TEST_CASE("solve_inside: examples") {
  const auto dodeca = solve_inside({{5, 12}}, 20);
  REQUIRE(dodeca.size() == 1);
  CHECK(dodeca[0].counts == DegreeCounts{{5, 6}});
  CHECK(solve_inside({{4, 9}}, 11).empty());
  CHECK(as_counts(solve_inside({{3, 2}, {4, 1}}, 4)) ==
        std::vector<DegreeCounts>{{{3, 2}}, {{4, 1}}});
  CHECK(as_counts(solve_inside({{3, 1}}, 3)) == std::vector<DegreeCounts>{{{3, 1}}});
  CHECK(solve_inside({}, 5).empty());
}

TEST_CASE("solve_inside: agrees with the full count box") {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const DegreeCounts available = random_counts(rng, 4, 6);
    const std::int64_t n = 3 + static_cast<std::int64_t>(rng() % 40);
    auto got = as_counts(solve_inside(available, n));
    for (const DegreeCounts& s : got) {
      CHECK(weighted_excess(s) == n - 2);
      for (auto [size, x] : s) {
        CHECK(x > 0);
        CHECK(x <= available.at(size));
      }
    }
    std::sort(got.begin(), got.end());
    CHECK(got == brute_force_inside_solutions(available, n));
  }
}

TEST_CASE("solve_inside: corpus face multisets") {
  for (const CorpusEntry& e : corpus()) {
    if (!e.rotation) continue;
    const DegreeCounts faces = face_degrees(trace_faces(e.graph, *e.rotation));
    std::int64_t count = 0;
    for (auto [d, k] : faces) count += k;
    if (count > 20) continue;
    const auto n = static_cast<std::int64_t>(e.graph.vertex_count());
    auto got = as_counts(solve_inside(faces, n));
    std::sort(got.begin(), got.end());
    CHECK_MESSAGE(got == brute_force_inside_solutions(faces, n), e.name);
  }
}

TEST_CASE("modular_obstruction: examples") {
  const auto herschel = modular_obstruction({{4, 9}}, 11);
  REQUIRE(herschel);
  CHECK(herschel->modulus == 2);
  CHECK(herschel->form == GrinbergForm::inside);
  CHECK(herschel->target_residue == 1);
  CHECK(herschel->attainable_totals == std::vector<std::int64_t>{0});
  CHECK(replay(*herschel));

  const auto grinberg = modular_obstruction({{5, 21}, {8, 3}, {9, 1}}, 46);
  REQUIRE(grinberg);
  CHECK(grinberg->modulus == 3);
  CHECK(grinberg->form == GrinbergForm::full);
  CHECK(grinberg->target_residue == 0);
  CHECK(grinberg->attainable_totals == std::vector<std::int64_t>{1, 2});
  CHECK(replay(*grinberg));

  CHECK_FALSE(modular_obstruction({{3, 2}}, 4));
  CHECK_FALSE(modular_obstruction({{5, 12}}, 20));
  CHECK_THROWS_AS(modular_obstruction({{4, 9}}, 11, std::vector<std::int64_t>{1}), std::invalid_argument);
}

TEST_CASE("replay rejects tampered certificates") {
  auto cert = *modular_obstruction({{5, 21}, {8, 3}, {9, 1}}, 46);
  auto wrong_target = cert;
  wrong_target.target_residue = 1;
  CHECK_FALSE(replay(wrong_target));
  auto wrong_modulus = cert;
  wrong_modulus.modulus = 2;
  CHECK_FALSE(replay(wrong_modulus));
  auto wrong_row = cert;
  wrong_row.rows[2].multiplicity = 2;  // two enneagons would make it feasible
  CHECK_FALSE(replay(wrong_row));
}

TEST_CASE("modular_obstruction: sound on random multisets") {
  Rng rng(43);
  int certified = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const DegreeCounts available = random_counts(rng, 3, 5);
    const std::int64_t n = 3 + static_cast<std::int64_t>(rng() % 30);
    const auto cert = modular_obstruction(available, n);
    if (!cert) continue;
    ++certified;
    CHECK(replay(*cert));
    if (cert->form == GrinbergForm::inside) {
      CHECK(brute_force_inside_solutions(available, n).empty());
    } else {
      CHECK_FALSE(brute_force_full_feasible(available));
    }
  }
  CHECK(certified > 50);
}

TEST_CASE("audit_inclusion_exclusion: examples") {
  const Graph sq = parse_edge_list("0 1\n1 2\n2 3\n0 3\n0 2");
  const CycleBasis b = fundamental_basis(sq);
  const AuditRecord plane = audit_inclusion_exclusion(b.cycles, 4);
  CHECK(plane.vertex_sum == 6);
  CHECK(plane.joint_pairs == 1);
  CHECK(plane.pair_intersection_sum == 2);
  CHECK(plane.union_size == 4);
  CHECK(plane.excess == 2);
  CHECK(plane.passes());

  const Graph k24 = corpus_entry("k24").graph;
  const CycleBasis t = basis_transform(fundamental_basis(k24), 0, 1, k24);
  const std::vector<Cycle> v0{t.cycles[0], t.cycles[2]};
  const AuditRecord pair = audit_inclusion_exclusion(v0, 6);
  CHECK(pair.triple_free);
  CHECK(pair.union_identity);
  CHECK(pair.pair_check_passes());
  CHECK(pair.excess_identity);
  CHECK(pair.passes());
  CHECK_FALSE(is_elementary_cycle(v0[0].edges ^ v0[1].edges, k24));

  const Graph k4 = parse_graph6("C~");
  const AuditRecord crowded = audit_inclusion_exclusion(fundamental_basis(k4).cycles, 4);
  CHECK_FALSE(crowded.triple_free);
  CHECK(crowded.max_multiplicity == 3);
  CHECK(crowded.crowded_vertices == std::vector<VertexId>{0});
  CHECK_FALSE(crowded.union_check_passes());
  CHECK_FALSE(crowded.passes());
}
