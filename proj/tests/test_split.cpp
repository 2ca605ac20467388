#include <doctest.h>

#include "fixtures.hpp"
#include "matreal/error.hpp"
#include "oracles.hpp"

using namespace matreal;

namespace {

std::vector<SplitCondition> conditions(const ValidationReport& r) {
  std::vector<SplitCondition> out;
  for (const SplitViolation& v : r.violations) out.push_back(v.condition);
  return out;
}

bool has(const std::vector<SplitCondition>& cs, SplitCondition c) {
  return std::find(cs.begin(), cs.end(), c) != cs.end();
}

}  // namespace

TEST_CASE("valid hypergraphs") {
  CHECK(validate_split(fixtures::qs_hypergraph()).valid());
  CHECK(oracle::split_conditions_hold(fixtures::qs_hypergraph()));
  CHECK(validate_split(fixtures::realization_example2_hypergraph()).valid());
  CHECK(validate_split(fixtures::rank4_12_hypergraph()).valid());
  CHECK(validate_split(fixtures::rank4_6_hypergraph()).valid());
  CHECK(validate_split({7, 3, {}}).valid());
}

TEST_CASE("each condition is named individually") {
  const auto pair = conditions(validate_split({6, 3, {{{1, 2, 3}, 2}, {{1, 2, 4}, 2}}}));
  CHECK(pair == std::vector<SplitCondition>{SplitCondition::PairwiseIntersection});

  const auto comp = conditions(validate_split({4, 3, {{{1, 2, 3, 4}, 2}}}));
  CHECK(comp == std::vector<SplitCondition>{SplitCondition::Complement});

  const auto rank = conditions(validate_split({6, 3, {{{1, 2, 3, 4}, 3}}}));
  CHECK(rank == std::vector<SplitCondition>{SplitCondition::RankBelowN});

  const auto size = conditions(validate_split({6, 3, {{{1, 2}, 2}}}));
  CHECK(size == std::vector<SplitCondition>{SplitCondition::EdgeLargerThanRank});

  const auto both = conditions(validate_split({5, 3, {{{1, 2, 3}, 3}}}));
  CHECK(has(both, SplitCondition::RankBelowN));
  CHECK(has(both, SplitCondition::EdgeLargerThanRank));

  CHECK(to_string(SplitCondition::PairwiseIntersection) == "pairwise-intersection");
  CHECK_THROWS_AS(elementary_split_matroid({6, 3, {{{1, 2}, 2}}}), Error);
}

TEST_CASE("report agrees with the direct inequality check on random hypergraphs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const int d = 6 + trial % 5, n = 2 + trial % 3;
    SplitHypergraph h{d, n, {}};
    const int q = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < q; ++k) {
      const int r = 1 + static_cast<int>(rng() % n);
      h.edges.push_back({oracle::random_subset(rng, d, 2 + static_cast<int>(rng() % (d - 2))), r});
    }
    CHECK(validate_split(h).valid() == oracle::split_conditions_hold(h));
  }
}

TEST_CASE("split rank formula and subspaces") {
  const Matroid p8 = elementary_split_matroid(
      {8, 4, {{{1, 2, 3, 4}, 3}, {{3, 4, 5, 6}, 3}, {{5, 6, 7, 8}, 3}, {{7, 8, 1, 2}, 3}, {{1, 2, 5, 6}, 3}}});
  CHECK(p8.rank({1, 2, 3, 4}) == 3);
  CHECK(p8.backend() == Backend::SplitHypergraph);
  for (ElementSet s : oracle::all_subsets(p8.ground())) REQUIRE(p8.rank(s) == fixtures::paving8().rank(s));

  const Matroid u = elementary_split_matroid({6, 3, {}});
  for (ElementSet s : oracle::all_subsets(u.ground())) REQUIRE(u.rank(s) == std::min(3, s.size()));

  CHECK(fixtures::rank4_6().rank({4, 5, 6}) == 2);
}

TEST_CASE("split invariants on random hypergraphs") {
  std::mt19937_64 rng(2024);
  int nontrivial = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 6 + trial % 5, n = 3 + trial % 2;
    const SplitHypergraph h = oracle::random_split(rng, d, n);
    REQUIRE(validate_split(h).valid());
    const Matroid m = elementary_split_matroid(h);
    nontrivial += !h.edges.empty();

    // Subspaces are exactly the edges.
    std::vector<std::pair<std::uint64_t, int>> want, got;
    for (const SplitEdge& e : h.edges) want.emplace_back(e.set.mask(), e.rank);
    for (const Subspace& l : subspaces(m)) got.emplace_back(l.points.mask(), l.rank);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    CHECK(want == got);

    for (const SplitEdge& e : h.edges) {
      for_each_k_subset(e.set, e.rank + 1, [&](ElementSet c) { REQUIRE(m.is_circuit(c)); });
    }
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
      for (std::size_t j = i + 1; j < h.edges.size(); ++j) CHECK(m.rank(h.edges[i].set | h.edges[j].set) == n);
    }
    CHECK(is_2_simple_all(m));

    const auto back = recognize_elementary_split(Matroid::from_circuits(d, oracle::circuits_by_rank(m)));
    REQUIRE(back.has_value());
    CHECK(back->edges.size() == h.edges.size());
  }
  CHECK(nontrivial > 20);
}

TEST_CASE("recognition and 2-simplicity on fixtures") {
  CHECK(recognize_elementary_split(fixtures::qs()).has_value());
  CHECK(recognize_elementary_split(fixtures::paving7()).has_value());
  CHECK(recognize_elementary_split(fixtures::concurrent_lines()).has_value());
  // A parallel pair inside a line: {1,2} and {1,2,3,4} overlap too much.
  const Matroid parallel = Matroid::from_vectors({{1, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK_FALSE(recognize_elementary_split(parallel).has_value());
  CHECK(is_2_simple_all(fixtures::qs()));
  CHECK(is_2_simple_all(fixtures::realization_example2()));
  CHECK(is_2_simple_all(Matroid::uniform(3, 6)));
}
