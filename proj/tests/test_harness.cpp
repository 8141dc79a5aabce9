#include <gtest/gtest.h>

#include <sstream>

#include "oddhole/generators.hpp"
#include "oddhole/suites.hpp"

using namespace oddhole;
using namespace oddhole::harness;

namespace {

std::string report_text(const SuiteReport& rep) {
  std::ostringstream os;
  write_report(os, rep, false);
  return os.str();
}

SuiteOptions opts(unsigned jobs = 1, std::optional<int> assume = std::nullopt) {
  return SuiteOptions{Budget{}, 1, jobs, assume};
}

/// C9 with an extra vertex on 0 and 2: a chordal path of length 2 whose long side has 7 edges.
Graph c9_with_ear() {
  GraphBuilder b = GraphBuilder::from(cycle_graph(9));
  Vertex x = b.add_vertex();
  b.add_edge(0, x);
  b.add_edge(x, 2);
  return b.build();
}

}  // namespace

TEST(Harness, SuiteIdsAreUnique) {
  std::set<std::string> ids;
  for (const auto* l : {&suites(), &conjectures()})
    for (const auto& d : *l) EXPECT_TRUE(ids.insert(d.id).second) << d.id;
  EXPECT_EQ(suites().size(), 15u);
  EXPECT_EQ(conjectures().size(), 3u);
  EXPECT_THROW(find_suite("no_such_suite"), InputError);
}

TEST(Harness, LemmaSuitesHaveNoViolationsOnMembers) {
  for (const auto& def : suites()) {
    auto rep = run_suite(def, default_corpus(def, 12, 3), opts(4));
    EXPECT_EQ(rep.count(Verdict::violation), 0u) << def.id;
    EXPECT_GT(rep.instances.size(), 0u) << def.id;
    std::size_t sum = 0;
    for (auto c : rep.counts) sum += c;
    EXPECT_EQ(sum, rep.instances.size()) << def.id;
  }
}

TEST(Harness, MostLemmaSuitesDecideSomething) {
  for (const char* id : {"L2.3", "theta_pair", "L3.1", "L4.1", "L4.2", "L4.3", "L4.4", "T4.6"}) {
    auto rep = run_suite(id, default_corpus(find_suite(id), 12, 3), opts(4));
    EXPECT_GT(rep.count(Verdict::consistent), 0u) << id;
  }
}

TEST(Harness, GrotzschViolatesSameLengthConjecture) {
  auto rep = run_suite("same_length_1_4a", default_corpus(find_suite("same_length_1_4a"), 8, 0), opts(2));
  ASSERT_EQ(rep.count(Verdict::violation), 1u);
  const InstanceRecord* hit = nullptr;
  for (const auto& r : rep.instances)
    if (r.outcome.verdict == Verdict::violation) hit = &r;
  ASSERT_NE(hit, nullptr);
  EXPECT_EQ(hit->bundle.at("graph6"), "JhdLA_gc?N_");
  EXPECT_EQ(hit->bundle.at("suite"), "same_length_1_4a");

  // The bundle survives a text round trip and reproduces on its own.
  Json bundle = Json::parse(hit->bundle.dump());
  auto r = replay(bundle);
  EXPECT_TRUE(r.reproduced()) << r.detail;
  EXPECT_EQ(r.actual, Verdict::violation);

  bundle["verdict"] = "consistent";
  EXPECT_FALSE(replay(bundle).reproduced());
}

TEST(Harness, OtherConjecturesHoldOnDefaultCorpus) {
  for (const char* id : {"wu_xu_xu_1_3", "k_lengths_1_4b"}) {
    auto rep = run_suite(id, default_corpus(find_suite(id), 8, 0), opts(2));
    EXPECT_EQ(rep.count(Verdict::violation), 0u) << id;
  }
}

TEST(Harness, AssumedNonMemberGivesReplayableViolation) {
  std::vector<CorpusItem> corpus{{c9_with_ear(), std::nullopt}};
  auto honest = run_suite("L2.3", corpus, opts());
  EXPECT_EQ(honest.count(Verdict::violation), 0u);
  EXPECT_EQ(honest.count(Verdict::not_applicable), honest.instances.size());

  auto forced = run_suite("L2.3", corpus, opts(1, 4));
  ASSERT_GT(forced.count(Verdict::violation), 0u);
  for (const auto& r : forced.instances) {
    if (r.outcome.verdict != Verdict::violation) continue;
    EXPECT_EQ(r.bundle.at("host"), "assumed");
    EXPECT_TRUE(replay(r.bundle).reproduced());
  }
}

TEST(Harness, NonMembersAreNotApplicable) {
  std::vector<CorpusItem> corpus{{cycle_graph(8), 3}, {gen::named("grotzsch"), 2}};
  for (const char* id : {"L2.3", "L4.1", "T4.6"}) {
    auto rep = run_suite(id, corpus, opts());
    EXPECT_EQ(rep.count(Verdict::not_applicable), rep.instances.size()) << id;
  }
}

TEST(Harness, OutputIsDeterministicAndIndependentOfJobs) {
  for (const char* id : {"L2.3", "L4.4", "T4.6", "same_length_1_4a"}) {
    auto corpus = default_corpus(find_suite(id), 10, 9);
    auto a = report_text(run_suite(id, corpus, opts(1)));
    auto b = report_text(run_suite(id, corpus, opts(1)));
    auto c = report_text(run_suite(id, corpus, opts(6)));
    EXPECT_EQ(a, b) << id;
    EXPECT_EQ(a, c) << id;
  }
}

TEST(Harness, SeedChangesTheGeneratedCorpus) {
  auto a = default_corpus(find_suite("L2.3"), 10, 1);
  auto b = default_corpus(find_suite("L2.3"), 10, 2);
  std::vector<std::string> ta, tb;
  for (const auto& c : a) ta.push_back(to_graph6(c.graph));
  for (const auto& c : b) tb.push_back(to_graph6(c.graph));
  EXPECT_NE(ta, tb);
}

TEST(Harness, CorpusMembersAreVerified) {
  for (const auto& c : member_corpus({2, 3, 4, 5}, 10, 4)) {
    ASSERT_TRUE(c.ell.has_value());
    EXPECT_EQ(check_membership(c.graph, *c.ell).status, Membership::member) << to_graph6(c.graph);
  }
}

TEST(Harness, SummaryCarriesTimingOnlyOnRequest) {
  auto rep = run_suite("L2.2", default_corpus(find_suite("L2.2"), 3, 0), opts());
  EXPECT_FALSE(summary_json(rep, false).contains("wall_time_s"));
  EXPECT_TRUE(summary_json(rep, true).contains("wall_time_s"));
  EXPECT_EQ(summary_json(rep, false).at("type"), "summary");
}

TEST(Harness, EmptyCorpusIsRejected) { EXPECT_THROW(run_suite("L2.3", {}, opts()), InputError); }

TEST(Generators, OddCycle) {
  gen::GeneratorSpec s;
  s.ell = 5;
  auto gs = gen::generate(s);
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(to_graph6(gs[0]), to_graph6(cycle_graph(11)));
}

TEST(Generators, SubdividedK4) {
  gen::GeneratorSpec s;
  s.kind = gen::GeneratorKind::subdivided_k4;
  s.arrises = {1, 2, 2, 2, 2, 1};
  auto gs = gen::generate(s);
  ASSERT_EQ(gs.size(), 1u);
  EXPECT_EQ(gs[0].num_vertices(), 8u);
  EXPECT_EQ(gs[0].num_edges(), 10u);
  s.face_odd = std::array<bool, 4>{false, false, false, false};
  EXPECT_THROW(gen::generate(s), InputError);
}

TEST(Generators, NamedAndAugmented) {
  gen::GeneratorSpec s;
  s.kind = gen::GeneratorKind::named;
  s.name = "petersen";
  EXPECT_EQ(to_graph6(gen::generate(s)[0]), to_graph6(petersen_graph()));
  s.name = "dodecahedron";
  EXPECT_THROW(gen::generate(s), InputError);

  gen::GeneratorSpec a;
  a.kind = gen::GeneratorKind::augmented_member;
  a.ell = 5;
  a.steps = 0;
  EXPECT_EQ(to_graph6(gen::generate(a)[0]), to_graph6(cycle_graph(11)));
  a.steps = 12;
  a.seed = 5;
  auto grown = gen::generate(a);
  EXPECT_GT(grown[0].num_vertices(), 11u);
  EXPECT_EQ(check_membership(grown[0], 5).status, Membership::member);
}

TEST(Generators, AugmentingPetersenStaysInG2) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto a = gen::augment_member(petersen_graph(), 2, 6, seed);
    EXPECT_TRUE(check_membership(a.graph, 2).member());
    if (!a.changed) EXPECT_EQ(to_graph6(a.graph), to_graph6(petersen_graph()));
  }
}

TEST(Generators, AugmentedMembersStayMembers) {
  for (int ell = 2; ell <= 5; ++ell)
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      auto a = gen::augment_member(gen::odd_cycle(ell), ell, 10, seed);
      ASSERT_TRUE(check_membership(a.graph, ell).member()) << ell << " " << seed;
    }
}

TEST(Harness, SuiteExamplesOnNamedInputs) {
  std::vector<CorpusItem> c11{{gen::odd_cycle(5), 5}};
  for (std::uint64_t seed = 0; seed < 6; ++seed) c11.push_back({gen::augment_member(gen::odd_cycle(5), 5, 8, seed).graph, 5});
  auto t51 = run_suite("T5.1", c11, opts());
  EXPECT_EQ(t51.count(Verdict::consistent), c11.size());

  std::vector<CorpusItem> named{{petersen_graph(), 2}, {gen::odd_cycle(5), 5}};
  auto wxx = run_suite("wu_xu_xu_1_3", named, opts());
  EXPECT_EQ(wxx.count(Verdict::consistent), 2u);

  auto l23 = run_suite("L2.3", {{petersen_graph(), 2}}, opts());
  EXPECT_GT(l23.count(Verdict::consistent), 0u);
  EXPECT_EQ(l23.count(Verdict::consistent), l23.instances.size());
}

TEST(Harness, TwoOddLengthsAllowFourColours) {
  // Cycles of lengths 5, 6 and 7: girth 5 with odd holes of two lengths.
  std::vector<CorpusItem> corpus{{theta_graph(2, 3, 4), std::nullopt}};
  auto rep = run_suite("k_lengths_1_4b", corpus, opts());
  ASSERT_EQ(rep.instances.size(), 1u);
  EXPECT_EQ(rep.instances[0].outcome.verdict, Verdict::consistent) << rep.instances[0].outcome.detail;
}
