#include <gtest/gtest.h>

#include <random>

#include "matchcert/families.hpp"
#include "matchcert/matching.hpp"
#include "matchcert/mgf.hpp"
#include "test_graphs.hpp"

namespace matchcert {
namespace {

using testing::as_edge_sets;
using testing::complete_graph;
using testing::cycle_graph;
using testing::path_graph;
using testing::star_graph;

TEST(MatchingTest, RejectsOverlappingEdges) {
  EXPECT_THROW(Matching({{0, 1}, {1, 2}}), GraphError);
  EXPECT_THROW(Matching({{3, 3}}), GraphError);
  const Matching m({{4, 2}, {1, 0}});
  EXPECT_EQ(m.edges(), (std::vector<Edge>{{0, 1}, {2, 4}}));
  EXPECT_EQ(m.mate(4), 2u);
  EXPECT_FALSE(m.covers(3));
}

TEST(MatchingTest, MaximumMatchingSizes) {
  EXPECT_EQ(maximum_matching(path_graph(2)).size(), 1u);
  EXPECT_EQ(maximum_matching(build_B(2)).size(), 6u);
  // (24 - 4) / 2 from |V| = 6r + 6 and 2r - 2 exposed vertices at r = 3.
  EXPECT_EQ(maximum_matching(build_G(3)).size(), 10u);
  EXPECT_EQ(maximum_matching(Multigraph(0)).size(), 0u);
  EXPECT_EQ(maximum_matching(testing::petersen_graph()).size(), 5u);
}

TEST(MatchingTest, MaximumMatchingIsValidAndDeterministic) {
  const Multigraph g = build_H(4);
  const Matching a = maximum_matching(g);
  EXPECT_TRUE(is_valid_matching(g, a));
  EXPECT_EQ(a, maximum_matching(g));
}

TEST(MatchingTest, Deficiency) {
  EXPECT_EQ(deficiency(build_B(2)), 2u);
  EXPECT_EQ(deficiency(build_G(3)), 4u);
  EXPECT_EQ(deficiency(build_F(5)), 2u);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const Multigraph g = testing::random_multigraph(rng, 15, 80);
    EXPECT_EQ(deficiency(g) % 2, g.vertex_count() % 2);
  }
}

TEST(MatchingTest, ExposedVertices) {
  const Multigraph c4 = cycle_graph(4);
  EXPECT_TRUE(exposed_vertices(c4, Matching({{0, 1}, {2, 3}})).empty());
  EXPECT_THROW(exposed_vertices(c4, Matching({{0, 2}})), GraphError);

  const Multigraph b2 = build_B(2);
  const auto exposed_b = exposed_vertices(b2, maximum_matching(b2));
  ASSERT_EQ(exposed_b.size(), 2u);
  for (VertexId v : exposed_b) EXPECT_TRUE(std::holds_alternative<CopyLabel>(b2.label(v)));

  const Multigraph g3 = build_G(3);
  const auto exposed_g = exposed_vertices(g3, maximum_matching(g3));
  ASSERT_EQ(exposed_g.size(), 4u);
  for (VertexId v : exposed_g) EXPECT_GE(v, 3u);
}

// ---------------------------------------------------------------------------
// Enumeration

TEST(EnumerateTest, SmallGraphs) {
  const auto p3 = all_maximum_matchings(path_graph(3), 100);
  EXPECT_TRUE(p3.exhaustive);
  EXPECT_EQ(as_edge_sets(p3.matchings),
            (std::set<std::vector<Edge>>{{{0, 1}}, {{1, 2}}}));

  const auto c4 = all_maximum_matchings(cycle_graph(4), 100);
  EXPECT_EQ(c4.matchings.size(), 2u);
  EXPECT_TRUE(c4.exhaustive);

  const auto empty = all_maximum_matchings(Multigraph(3), 5);
  ASSERT_EQ(empty.matchings.size(), 1u);
  EXPECT_TRUE(empty.matchings[0].empty());
  EXPECT_TRUE(empty.exhaustive);
}

TEST(EnumerateTest, CapIsReportedThroughFlag) {
  const Multigraph k4 = complete_graph(4);  // 3 perfect matchings
  EXPECT_FALSE(all_maximum_matchings(k4, 2).exhaustive);
  EXPECT_EQ(all_maximum_matchings(k4, 2).matchings.size(), 2u);
  EXPECT_TRUE(all_maximum_matchings(k4, 3).exhaustive);
  EXPECT_THROW(all_maximum_matchings(k4, 0), std::invalid_argument);
}

TEST(EnumerateTest, VisitorCanStopEarly) {
  int seen = 0;
  const auto result = enumerate_maximum_matchings(complete_graph(6), 1000, [&](const Matching&) {
    return ++seen < 4;
  });
  EXPECT_EQ(seen, 4);
  EXPECT_EQ(result.count, 4u);
  EXPECT_TRUE(result.stopped_by_visitor);
  EXPECT_FALSE(result.exhaustive);
}

TEST(EnumerateTest, FamilyB2MatchesOracle) {
  const Multigraph b2 = build_B(2);
  const auto listed = all_maximum_matchings(b2, 1'000'000);
  ASSERT_TRUE(listed.exhaustive);
  for (const auto& m : listed.matchings) EXPECT_EQ(m.size(), 6u);
  EXPECT_EQ(as_edge_sets(listed.matchings), as_edge_sets(brute_force_all_maximum_matchings(b2)));
  EXPECT_EQ(listed.matchings.size(), 448u);
}

// Closed-form counts, derived independently of the enumerator. In G(r) the
// three hubs are matched into three distinct triangles (ordered choice), the
// rest of each such triangle is matched internally, and every other triangle
// keeps one of its three edges. F(r) is the same except each hub has two
// admissible vertices per triangle.
TEST(EnumerateTest, FamilyCountsMatchClosedForm) {
  auto count = [](const Multigraph& g) {
    const auto r = enumerate_maximum_matchings(g, 10'000'000, [](const Matching&) { return true; });
    EXPECT_TRUE(r.exhaustive);
    return r.count;
  };
  EXPECT_EQ(count(build_G(3)), 7u * 6 * 5 * 81);       // 17010
  EXPECT_EQ(count(build_H(3)), 7u * 6 * 5 * 81);       // same support graph
  EXPECT_EQ(count(build_F(5)), 5u * 4 * 3 * 8 * 9);    // 4320
  EXPECT_EQ(count(build_F(6)), 6u * 5 * 4 * 8 * 27);   // 25920
}

TEST(EnumerateTest, EmitsDistinctMatchings) {
  const auto listed = all_maximum_matchings(build_F(5), 1'000'000);
  std::set<std::vector<Edge>> unique = as_edge_sets(listed.matchings);
  EXPECT_EQ(unique.size(), listed.matchings.size());
}

// ---------------------------------------------------------------------------
// Brute-force oracle

TEST(BruteForceTest, KnownCounts) {
  EXPECT_EQ(brute_force_matching_number(complete_graph(4)), 2u);
  EXPECT_EQ(brute_force_all_maximum_matchings(complete_graph(4)).size(), 3u);
  EXPECT_EQ(brute_force_matching_number(cycle_graph(5)), 2u);
  EXPECT_EQ(brute_force_all_maximum_matchings(cycle_graph(5)).size(), 5u);
  EXPECT_EQ(brute_force_matching_number(path_graph(2)), 1u);
  EXPECT_EQ(brute_force_all_maximum_matchings(path_graph(2)).size(), 1u);
}

TEST(BruteForceTest, GuardsEdgeCount) {
  EXPECT_THROW(brute_force_matching_number(complete_graph(9)), std::invalid_argument);  // 36 edges
  EXPECT_NO_THROW(brute_force_matching_number(complete_graph(8)));                     // 28 edges
}

TEST(OracleEquivalenceTest, RandomGraphs) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const Multigraph g = testing::random_multigraph(rng, 12, kBruteForceEdgeLimit);
    const std::size_t nu = brute_force_matching_number(g);
    ASSERT_EQ(matching_number(g), nu) << serialize_mgf(g);
    const auto listed = all_maximum_matchings(g, 10'000'000);
    ASSERT_TRUE(listed.exhaustive);
    ASSERT_EQ(as_edge_sets(listed.matchings), as_edge_sets(brute_force_all_maximum_matchings(g)))
        << serialize_mgf(g);
  }
}

// ---------------------------------------------------------------------------
// Gallai-Edmonds, Tutte-Berge, Hall

TEST(GallaiEdmondsTest, Examples) {
  const auto c3 = gallai_edmonds(cycle_graph(3));
  EXPECT_EQ(c3.exposable, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_TRUE(c3.boundary.empty());

  const auto c4 = gallai_edmonds(cycle_graph(4));
  EXPECT_TRUE(c4.exposable.empty());
  EXPECT_TRUE(c4.boundary.empty());
  EXPECT_EQ(c4.rest.size(), 4u);

  const Multigraph g3 = build_G(3);
  const auto ge = gallai_edmonds(g3);
  EXPECT_EQ(ge.boundary, (std::vector<VertexId>{0, 1, 2}));
  for (VertexId v : ge.exposable) EXPECT_TRUE(std::holds_alternative<CopyLabel>(g3.label(v)));
}

TEST(GallaiEdmondsTest, MembershipMatchesEnumeration) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Multigraph g = testing::random_multigraph(rng, 11, 40);
    const auto ge = gallai_edmonds(g);
    std::vector<char> exposed_somewhere(g.vertex_count(), 0);
    const auto listed = all_maximum_matchings(g, 1'000'000);
    ASSERT_TRUE(listed.exhaustive);
    for (const auto& m : listed.matchings)
      for (VertexId v : exposed_vertices(g, m)) exposed_somewhere[v] = 1;
    std::vector<VertexId> expected;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (exposed_somewhere[v]) expected.push_back(v);
    EXPECT_EQ(ge.exposable, expected) << serialize_mgf(g);
    EXPECT_EQ(ge.exposable.size() + ge.boundary.size() + ge.rest.size(), g.vertex_count());
  }
}

TEST(TutteBergeTest, Examples) {
  const auto g3 = tutte_berge_witness(build_G(3));
  EXPECT_EQ(g3.barrier, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(g3.odd_components, 7u);
  EXPECT_EQ(g3.deficiency, 4u);

  const auto f5 = tutte_berge_witness(build_F(5));
  EXPECT_EQ(f5.barrier.size(), 3u);
  EXPECT_EQ(f5.odd_components, 5u);
  EXPECT_EQ(f5.deficiency, 2u);

  const auto k2 = tutte_berge_witness(path_graph(2));
  EXPECT_TRUE(k2.barrier.empty());
  EXPECT_EQ(k2.odd_components, 0u);
  EXPECT_EQ(k2.deficiency, 0u);
}

TEST(TutteBergeTest, HoldsOnRandomGraphs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Multigraph g = testing::random_multigraph(rng, 30, 200);
    const auto w = tutte_berge_witness(g);
    EXPECT_EQ(w.odd_components - w.barrier.size(), deficiency(g));
  }
}

TEST(ParallelEdgesTest, CollapsingMultiplicitiesChangesNothing) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const Multigraph g = testing::random_multigraph(rng, 11, 30, 5);
    const Multigraph s = g.support();
    EXPECT_EQ(matching_number(g), matching_number(s));
    EXPECT_EQ(deficiency(g), deficiency(s));
    EXPECT_EQ(gallai_edmonds(g).exposable, gallai_edmonds(s).exposable);
    EXPECT_EQ(as_edge_sets(all_maximum_matchings(g, 1'000'000).matchings),
              as_edge_sets(all_maximum_matchings(s, 1'000'000).matchings));
  }
}

TEST(HallTest, Examples) {
  const Multigraph b2 = build_B(2);
  const auto parts = classify_biregular_bipartite(b2);
  ASSERT_TRUE(parts.has_value());
  EXPECT_FALSE(hall_violator(b2, parts->part_a).has_value());

  const auto v_side = hall_violator(b2, parts->part_b);
  ASSERT_TRUE(v_side.has_value());
  std::set<VertexId> nbrs;
  for (VertexId v : *v_side)
    for (VertexId w : b2.support_neighbors(v)) nbrs.insert(w);
  EXPECT_LT(nbrs.size(), v_side->size());

  const std::vector<VertexId> leaves{1, 2, 3};
  EXPECT_EQ(hall_violator(star_graph(3), leaves), leaves);

  const std::vector<VertexId> bad{0};
  EXPECT_THROW(hall_violator(cycle_graph(3), bad), GraphError);
}

TEST(HallTest, AbsentIffEveryMaximumMatchingSaturatesSide) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    // Random bipartite multigraph with sides [0, p) and [p, n).
    const std::size_t p = testing::uniform(rng, 1, 6);
    const std::size_t q = testing::uniform(rng, 1, 6);
    Multigraph g(p + q);
    for (VertexId u = 0; u < p; ++u)
      for (VertexId v = static_cast<VertexId>(p); v < p + q; ++v)
        if (rng() % 3 == 0) g.add_edges(u, v, 1 + rng() % 2);
    std::vector<VertexId> side(p);
    std::iota(side.begin(), side.end(), 0);

    const auto violator = hall_violator(g, side);
    bool all_saturate = true;
    for (const auto& m : all_maximum_matchings(g, 1'000'000).matchings)
      for (VertexId v : side)
        if (!m.covers(v)) all_saturate = false;
    EXPECT_EQ(!violator.has_value(), all_saturate);
    if (violator) {
      std::set<VertexId> nbrs;
      for (VertexId v : *violator)
        for (VertexId w : g.support_neighbors(v)) nbrs.insert(w);
      EXPECT_LT(nbrs.size(), violator->size());
    }
  }
}

}  // namespace
}  // namespace matchcert
