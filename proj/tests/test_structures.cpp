#include <gtest/gtest.h>

#include "oddhole/graph6.hpp"
#include "oddhole/named_graphs.hpp"
#include "oddhole/structures.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace oddhole;

namespace {

const std::vector<Vertex> kOuter{0, 1, 2, 3, 4};

std::set<std::vector<Vertex>> as_set(const ChordalPathList& l) {
  std::set<std::vector<Vertex>> s;
  for (const auto& cp : l.paths) s.insert(cp.path.vertices);
  return s;
}

using fixtures::k4_members;

}  // namespace

TEST(ChordalPath, PetersenOuterCycle) {
  Graph p = petersen_graph();
  auto list = find_chordal_paths(p, kOuter);
  ASSERT_TRUE(list.complete());
  ASSERT_EQ(list.paths.size(), 5u);
  const auto& cp = list.paths[0];
  EXPECT_EQ(cp.path.vertices, (std::vector<Vertex>{0, 5, 7, 2}));
  EXPECT_EQ(cp.len_p(), 3u);
  EXPECT_EQ(cp.len_p1(), 3u);
  EXPECT_EQ(cp.len_p2(), 2u);
  EXPECT_TRUE(check_chordal_path(p, kOuter, cp.path.vertices));
  auto r = check_easy_case(2, cp);
  EXPECT_EQ(r.verdict, Verdict::consistent);
  EXPECT_EQ(r.branch, EasyCaseBranch::long_path);
}

TEST(ChordalPath, ThetaArmIsTheOnlyChordalPath) {
  Graph g = theta_graph(5, 6, 7);
  // The 5 and 6 arms form the hole; the 7 arm joins its two poles.
  auto holes = enumerate_holes(g, std::optional<std::size_t>(11));
  ASSERT_EQ(holes.holes.size(), 1u);
  auto list = find_chordal_paths(g, holes.holes[0]);
  ASSERT_EQ(list.paths.size(), 1u);
  EXPECT_EQ(list.paths[0].len_p(), 7u);
  EXPECT_EQ(list.paths[0].len_p1(), 5u);
  EXPECT_EQ(list.paths[0].len_p2(), 6u);
}

TEST(ChordalPath, AdjacentEndsAreAllowed) {
  // C5 plus a 5-path between consecutive vertices 0 and 1.
  GraphBuilder b = GraphBuilder::from(cycle_graph(5));
  b.add_path(0, 1, 5);
  Graph g = b.build();
  auto list = find_chordal_paths(g, std::vector<Vertex>{0, 1, 2, 3, 4});
  ASSERT_EQ(list.paths.size(), 1u);
  EXPECT_FALSE(list.paths[0].path.induced);
  EXPECT_EQ(list.paths[0].len_p1(), 1u);
  EXPECT_EQ(check_easy_case(2, list.paths[0]).branch, EasyCaseBranch::p1_is_edge);
  EXPECT_TRUE(check_chordal_path(g, {0, 1, 2, 3, 4}, list.paths[0].path.vertices));
}

TEST(ChordalPath, MatchesSubsetOracle) {
  Rng rng(303);
  int seen = 0;
  for (int t = 0; t < 200; ++t) {
    Graph g = oracle::random_graph(6 + rng.below(7), 0.2 + 0.25 * rng.uniform(), rng);
    auto holes = enumerate_holes(g);
    for (const auto& h : holes.holes) {
      auto list = find_chordal_paths(g, h);
      ASSERT_TRUE(list.complete());
      ASSERT_EQ(as_set(list), oracle::chordal_paths_by_subsets(g, h.vertices()));
      for (const auto& cp : list.paths) {
        ASSERT_TRUE(check_chordal_path(g, h.vertices(), cp.path.vertices));
        if (h.odd) ASSERT_EQ(cp.len_p1() % 2, cp.len_p() % 2);
      }
      seen += static_cast<int>(list.paths.size());
    }
  }
  EXPECT_GT(seen, 100);
}

TEST(ChordalPath, ValidatorRejectsNonTheta) {
  Graph p = petersen_graph();
  EXPECT_FALSE(check_chordal_path(p, kOuter, {0, 1}));
  EXPECT_TRUE(check_chordal_path(p, kOuter, {0, 5, 8, 3}));
  EXPECT_FALSE(check_chordal_path(p, kOuter, {0, 5, 7}));        // ends off C
  EXPECT_FALSE(check_chordal_path(p, kOuter, {0, 5, 7, 9, 4}));  // 7 sees 2
}

TEST(EasyCase, Arithmetic) {
  EXPECT_EQ(check_easy_case(2, 1, 1, 4).branch, EasyCaseBranch::p1_is_edge);
  EXPECT_EQ(check_easy_case(3, 5, 5, 2).verdict, Verdict::consistent);
  EXPECT_EQ(check_easy_case(3, 5, 3, 4).verdict, Verdict::violation);
  EXPECT_EQ(check_easy_case(3, 7, 5, 2).verdict, Verdict::violation);  // |P| != |P1|
  EXPECT_THROW(check_easy_case(2, 2, 3, 2), InputError);
  EXPECT_THROW(check_easy_case(2, 3, 3, 3), InputError);
}

TEST(EasyCase, HoldsInMembers) {
  Rng rng(17);
  int checked = 0;
  std::vector<std::pair<Graph, int>> graphs;
  graphs.push_back({petersen_graph(), 2});
  for (int ell : {2, 3})
    for (auto& g : k4_members(ell, static_cast<std::size_t>(2 * ell))) graphs.push_back({g, ell});
  for (int t = 0; t < 3000 && graphs.size() < 400; ++t) {
    Graph g = oracle::random_graph(8 + rng.below(5), 0.2 + 0.1 * rng.uniform(), rng);
    if (check_membership(g, 2).member()) graphs.push_back({g, 2});
  }
  for (const auto& [g, ell] : graphs)
    for (const auto& h : odd_holes(g).holes)
      for (const auto& cp : find_chordal_paths(g, h).paths) {
        ASSERT_EQ(check_easy_case(ell, cp).verdict, Verdict::consistent) << to_graph6(g);
        ++checked;
      }
  EXPECT_GT(checked, 500);
}

TEST(Theta, SplitRecoversSharedPath) {
  auto t = theta_split({0, 1, 2, 3, 4}, {0, 1, 6, 8, 5});
  ASSERT_TRUE(t);
  EXPECT_EQ(t->shared.size(), 2u);
  EXPECT_EQ(t->rest1.size() + t->rest2.size(), 10u);
  EXPECT_TRUE(theta_split({0, 1, 2, 3, 4}, {0, 5, 7, 2, 1}));
  EXPECT_FALSE(theta_split({0, 1, 2, 3, 4}, {0, 5, 2, 6}));  // shared vertices are not one arc
  EXPECT_FALSE(theta_split({0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}));
}

TEST(Theta, PetersenPairsFormOddK4) {
  Graph p = petersen_graph();
  Host host = Host::verify(p, 2);
  auto holes = odd_holes(p).holes;
  int pairs = 0, induced = 0;
  for (std::size_t i = 0; i < holes.size(); ++i)
    for (std::size_t j = i + 1; j < holes.size(); ++j) {
      if (!theta_split(holes[i].vertices(), holes[j].vertices())) continue;
      auto r = check_theta_pair(host, holes[i].vertices(), holes[j].vertices());
      ASSERT_EQ(r.verdict, Verdict::consistent) << r.reason;
      if (r.induced) {
        ++induced;
        continue;
      }
      ASSERT_EQ(r.sym_diff, 8u);
      ASSERT_TRUE(r.subdivision);
      ASSERT_TRUE(validate_k4(p, *r.subdivision));
      ++pairs;
    }
  EXPECT_GT(pairs, 0);
  EXPECT_GT(induced, 0);
}

TEST(Theta, InducedPairIsConsistent) {
  Graph g = theta_graph(2, 3, 3);  // holes 5, 5, 6
  Host host = Host::verify(g, 2);
  ASSERT_EQ(host.status(), Host::Status::verified);
  auto holes = odd_holes(g).holes;
  ASSERT_EQ(holes.size(), 2u);
  auto r = check_theta_pair(host, holes[0].vertices(), holes[1].vertices());
  EXPECT_TRUE(r.induced);
  EXPECT_EQ(r.verdict, Verdict::consistent);
}

TEST(Theta, WrongEllIsCaughtUnderAssumption) {
  Graph g = subdivided_k4({1, 2, 2, 2, 2, 1});
  auto holes = odd_holes(g).holes;
  Host wrong = Host::assume(g, 3);
  int violations = 0;
  for (std::size_t i = 0; i < holes.size(); ++i)
    for (std::size_t j = i + 1; j < holes.size(); ++j)
      if (theta_split(holes[i].vertices(), holes[j].vertices()))
        violations += check_theta_pair(wrong, holes[i].vertices(), holes[j].vertices()).verdict == Verdict::violation;
  EXPECT_GT(violations, 0);
  EXPECT_EQ(check_theta_pair(Host::verify(g, 3), holes[0].vertices(), holes[1].vertices()).verdict,
            Verdict::not_applicable);
}

TEST(Cycles, PetersenCycleCounts) {
  Graph p = petersen_graph();
  auto count = [&](std::size_t len) {
    BudgetMeter m;
    std::size_t c = 0;
    for_each_cycle_of_length(p, len, m, [&](const std::vector<Vertex>& cyc) {
      EXPECT_TRUE(is_cycle(p, cyc));
      EXPECT_EQ(canonical_cycle(cyc), cyc);
      ++c;
      return true;
    });
    return c;
  };
  EXPECT_EQ(count(5), 12u);
  EXPECT_EQ(count(6), 10u);
  EXPECT_EQ(count(7), 0u);
  EXPECT_EQ(count(8), 15u);
  EXPECT_EQ(count(9), 20u);
}

TEST(Cycles, MatchSubsetOracle) {
  Rng rng(55);
  for (int t = 0; t < 60; ++t) {
    Graph g = oracle::random_graph(4 + rng.below(5), 0.3 + 0.4 * rng.uniform(), rng);
    for (std::size_t len = 3; len <= g.num_vertices(); ++len) {
      BudgetMeter m;
      std::size_t c = 0;
      for_each_cycle_of_length(g, len, m, [&](const std::vector<Vertex>&) { return ++c, true; });
      ASSERT_EQ(c, oracle::cycles_of_length_by_subsets(g, len)) << to_graph6(g) << " len " << len;
    }
  }
}

TEST(FourEll, PetersenEightCycles) {
  Graph p = petersen_graph();
  Host host = Host::verify(p, 2);
  BudgetMeter m;
  int one = 0, two = 0;
  for_each_cycle_of_length(p, 8, m, [&](const std::vector<Vertex>& c) {
    auto r = check_4ell_hole_chords(host, c);
    EXPECT_EQ(r.verdict, Verdict::consistent) << r.reason;
    if (r.chords == 1) ++one;
    if (r.chords == 2) {
      ++two;
      EXPECT_TRUE(r.subdivision && validate_k4(p, *r.subdivision));
    }
    return true;
  });
  // Each 8-cycle is Petersen minus an edge's ends, leaving exactly two chords.
  EXPECT_EQ(one, 0);
  EXPECT_EQ(two, 15);
  EXPECT_THROW(check_4ell_hole_chords(host, kOuter), InputError);
}

TEST(FourEll, ThreeChordsAreAViolationUnderAssumption) {
  // An 8-cycle with three chords.
  GraphBuilder b = GraphBuilder::from(cycle_graph(8));
  b.add_edge(0, 4);
  b.add_edge(1, 5);
  b.add_edge(2, 6);
  Graph g = b.build();
  auto r = check_4ell_hole_chords(Host::assume(g, 2), {0, 1, 2, 3, 4, 5, 6, 7});
  EXPECT_EQ(r.chords, 3u);
  EXPECT_EQ(r.verdict, Verdict::violation);
}

TEST(OddK4Lemma, BalancedMembersSatisfyClaims) {
  int balanced = 0, claim3 = 0;
  for (int ell : {2, 3, 4}) {
    for (const Graph& g : k4_members(ell, static_cast<std::size_t>(ell + 2))) {
      Host host = Host::verify(g, ell);
      for (const auto& h : find_k4_subdivisions(g).subdivisions) {
        if (h.kind != K4Kind::balanced && h.kind != K4Kind::balanced_type_1_2) continue;
        ++balanced;
        auto r = lemma_odd_k4_check(host, h);
        ASSERT_EQ(r.claim1.verdict, Verdict::consistent) << r.claim1.detail;
        ASSERT_EQ(r.claim2.verdict, Verdict::consistent) << r.claim2.detail;
        ASSERT_NE(r.claim3.verdict, Verdict::violation);
        claim3 += r.claim3.verdict == Verdict::consistent;
      }
    }
  }
  EXPECT_GT(balanced, 0);
  EXPECT_GT(claim3, 0);
}

TEST(OddK4Lemma, NegativeControlUnderAssumption) {
  Graph g = subdivided_k4({2, 2, 3, 3, 2, 3});  // faces 7, 7, 8, 8 and no unit arris
  auto h = find_k4_subdivisions(g).subdivisions.at(0);
  ASSERT_EQ(h.kind, K4Kind::balanced);
  auto r = lemma_odd_k4_check(Host::assume(g, 3), h);
  EXPECT_EQ(r.claim1.verdict, Verdict::violation);
  EXPECT_EQ(r.claim3.verdict, Verdict::not_applicable);
  EXPECT_EQ(lemma_odd_k4_check(Host::verify(g, 4), h).claim1.verdict, Verdict::not_applicable);
}

TEST(OddK4Lemma, OutsideVertexWithTwoNeighboursIsReported) {
  // Type (1,2) subdivision plus a vertex seeing two far-apart vertices of H, host assumed.
  Graph base = subdivided_k4({2, 1, 2, 2, 1, 3});
  auto h = find_k4_subdivisions(base).subdivisions.at(0);
  ASSERT_EQ(h.kind, K4Kind::balanced_type_1_2);
  GraphBuilder b = GraphBuilder::from(base);
  Vertex x = b.add_vertex();
  b.add_edge(x, h.arrises[h.labeling->p2][1]);
  b.add_edge(x, h.arrises[h.labeling->p1][1]);
  Graph g = b.build();
  auto r = lemma_odd_k4_check(Host::assume(g, 2), h, Budget{1'000'000});
  if (r.claim3.verdict != Verdict::not_applicable) {
    EXPECT_EQ(r.claim3.verdict, Verdict::violation);
    EXPECT_EQ(r.offending_vertex, x);
  }
  EXPECT_THROW(lemma_odd_k4_check(Host::assume(g, 2), find_k4_subdivisions(complete_graph(4)).subdivisions.at(0)),
               InputError);
}

TEST(DirectConnection, Examples) {
  Graph c6 = cycle_graph(6);
  auto dc = find_direct_connection(c6, VertexSet{0}, VertexSet{3});
  ASSERT_TRUE(dc);
  EXPECT_EQ(dc->path, (std::vector<Vertex>{1, 2}));
  EXPECT_TRUE(validate_direct_connection(c6, *dc));

  auto adj = find_direct_connection(c6, VertexSet{0}, VertexSet{1});
  ASSERT_TRUE(adj);
  EXPECT_TRUE(adj->path.empty());
  EXPECT_EQ(adj->linking_edge, (Edge{0, 1}));
  EXPECT_TRUE(validate_direct_connection(c6, *adj));

  auto around = find_direct_connection(c6, VertexSet{0}, VertexSet{1}, {{1, 0}});
  ASSERT_TRUE(around);
  EXPECT_EQ(around->path, (std::vector<Vertex>{5, 4, 3, 2}));
  EXPECT_TRUE(validate_direct_connection(c6, *around));

  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(find_direct_connection(two, VertexSet{0}, VertexSet{3}));
  EXPECT_THROW(find_direct_connection(c6, VertexSet{0}, VertexSet{0, 1}), InputError);

  auto single = find_direct_connection(c6, VertexSet{0}, VertexSet{2});
  ASSERT_TRUE(single);
  EXPECT_EQ(single->path, (std::vector<Vertex>{1}));
  EXPECT_TRUE(validate_direct_connection(c6, *single));

  // Petersen outer cycle and the inner vertex on its first spoke touch directly.
  Graph p = petersen_graph();
  auto spoke = find_direct_connection(p, VertexSet{0, 1, 2, 3, 4}, VertexSet{5});
  ASSERT_TRUE(spoke);
  EXPECT_TRUE(spoke->path.empty());
  EXPECT_EQ(spoke->linking_edge, (Edge{0, 5}));
  EXPECT_TRUE(validate_direct_connection(p, *spoke));

  DirectConnection bad = *dc;
  bad.path = {1, 2, 3};
  EXPECT_FALSE(validate_direct_connection(c6, bad));
}

TEST(DirectConnection, ExistsExactlyWhenLinked) {
  Rng rng(91);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = 4 + rng.below(9);
    Graph g = oracle::random_graph(n, 0.1 + 0.3 * rng.uniform(), rng);
    VertexSet h1, h2;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      auto r = rng.below(4);
      if (r == 0) h1.insert(v);
      if (r == 1) h2.insert(v);
    }
    if (h1.empty() || h2.empty()) continue;
    auto dc = find_direct_connection(g, h1, h2);
    // Linked iff some component of G - (h1 ∪ h2), extended by h1 and h2, meets both.
    bool edge = false;
    h1.for_each([&](Vertex v) { edge = edge || g.neighborhood(v).intersects(h2); });
    bool linked = edge;
    for (const auto& comp : components(g, g.vertex_set() - h1 - h2)) {
      VertexSet cs = VertexSet::of(comp);
      if (neighbors_of_set(g, cs).intersects(h1) && neighbors_of_set(g, cs).intersects(h2)) linked = true;
    }
    ASSERT_EQ(dc.has_value(), linked);
    if (dc) ASSERT_TRUE(validate_direct_connection(g, *dc)) << validate_direct_connection(g, *dc).reason;
  }
}
