// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "oddhole/cli.hpp"
#include "oddhole/oddhole.hpp"
#include "oracles.hpp"

using namespace oddhole;

namespace {

// Pinned sizes and limits.
constexpr std::size_t kHoleGraphs = 1000;
constexpr std::size_t kHoleMaxN = 12;
constexpr double kHoleSeconds = 300.0;
constexpr std::size_t kColourGraphs = 500;
constexpr std::size_t kColourMaxN = 10;
constexpr std::size_t kLemmaInstances = 10'000;
constexpr std::size_t kLemmaPerEll = 250;
constexpr std::size_t kDecomposeGraphs = 1000;
constexpr std::size_t kDecomposeMinN = 11, kDecomposeMaxN = 40;
constexpr std::size_t kColourMembersPerEll = 150;
constexpr std::size_t kRoundTripLines = 10'000;
constexpr std::uint64_t kSeed = 20261015;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  " << id << ". " << name << ": " << detail << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << x;
  return os.str();
}

void holes_oracle() {
  auto start = std::chrono::steady_clock::now();
  Rng rng(kSeed);
  std::vector<Graph> graphs{petersen_graph(), grotzsch_graph(), wheel_graph(5), wheel_graph(7), wheel_graph(11),
                            theta_graph(2, 3, 4), subdivided_k4({1, 2, 2, 2, 2, 1})};
  const std::size_t named = graphs.size();
  for (std::size_t i = 0; i < kHoleGraphs; ++i)
    graphs.push_back(oracle::random_graph(1 + rng.below(kHoleMaxN), 0.1 + 0.5 * rng.uniform(), rng));
  std::size_t mismatches = 0, holes = 0;
  for (const auto& g : graphs) {
    auto got = enumerate_holes(g);
    std::set<std::vector<Vertex>> mine;
    for (const auto& h : got.holes) mine.insert(h.vertices());
    auto want = oracle::holes_by_subsets(g);
    holes += want.size();
    if (!got.complete() || mine != want || mine.size() != got.holes.size()) ++mismatches;
  }
  double t = seconds_since(start);
  report(1, "holes match the subset oracle", mismatches == 0 && t < kHoleSeconds,
         std::to_string(kHoleGraphs) + " random graphs (n <= " + std::to_string(kHoleMaxN) + ") + " +
             std::to_string(named) + " named, " + std::to_string(holes) + " holes, " + std::to_string(mismatches) +
             " discrepancies, " + fmt(t) + " s (limit " + fmt(kHoleSeconds) + ")");
}

void colouring_oracle() {
  Rng rng(kSeed + 1);
  std::size_t mismatches = 0, unverified = 0;
  std::map<int, std::size_t> spread;
  for (std::size_t i = 0; i < kColourGraphs; ++i) {
    Graph g = oracle::random_graph(1 + rng.below(kColourMaxN), 0.1 + 0.7 * rng.uniform(), rng);
    auto r = chromatic_number(g);
    int want = oracle::chromatic_by_assignments(g);
    ++spread[want];
    if (r.status != ColoringStatus::exact || r.k != want) ++mismatches;
    if (!verify_certificate(g, r)) ++unverified;
  }
  std::string hist;
  for (auto [k, c] : spread) hist += (hist.empty() ? "" : " ") + std::to_string(k) + ":" + std::to_string(c);
  report(2, "chromatic number matches all-assignments oracle", mismatches == 0 && unverified == 0,
         std::to_string(kColourGraphs) + " random graphs (n <= " + std::to_string(kColourMaxN) + "), " +
             std::to_string(mismatches) + " discrepancies, " + std::to_string(unverified) +
             " unverified certificates, chi spread {" + hist + "}");
}

void golden_values() {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  Graph pet = petersen_graph();
  expect(girth(pet) == 5u, "petersen girth");
  auto ph = enumerate_holes(pet, HoleQuery{5, 5, false});
  expect(ph.holes.size() == 12, "petersen 5-holes");
  expect(check_membership(pet, 2).member(), "petersen in G_2");
  auto pc = chromatic_number(pet);
  expect(pc.status == ColoringStatus::exact && pc.k == 3 && verify_certificate(pet, pc), "petersen chi");
  auto pk = is_k_vertex_critical(pet, 3);
  expect(pk.decided && !pk.critical && verify_certificate(pet, pk, 3), "petersen not 3-critical");

  Graph gr = grotzsch_graph();
  auto gc = chromatic_number(gr);
  expect(gc.status == ColoringStatus::exact && gc.k == 4 && verify_certificate(gr, gc), "grotzsch chi");
  auto gk = is_k_vertex_critical(gr, 4);
  expect(gk.decided && gk.critical && verify_certificate(gr, gk, 4), "grotzsch 4-critical");
  expect(!find_two_edge_cut(gr), "grotzsch has no 2-edge-cut");

  Graph c11 = gen::odd_cycle(5);
  expect(check_membership(c11, 5).member(), "C11 in G_5");
  auto d = decompose(c11, 5);
  expect(d.status == DecomposeStatus::certified && d.certificate &&
             d.certificate->outcome == DecomposeOutcome::degree2_vertex && verify_certificate(c11, *d.certificate),
         "C11 degree2 certificate");

  std::string detail = "petersen girth 5, 12 five-holes, G_2, chi 3, not 3-critical; grotzsch chi 4, "
                       "4-critical, no 2-edge-cut; C11 in G_5 with degree2 certificate";
  if (!bad.empty()) {
    detail = "failed:";
    for (const auto& b : bad) detail += " [" + b + "]";
  }
  report(3, "named-graph golden values", bad.empty(), detail);
}

void lemma_suites() {
  auto corpus = harness::member_corpus({2, 3, 4, 5}, kLemmaPerEll, kSeed);
  harness::SuiteOptions opt{Budget{}, kSeed, std::max(1u, std::thread::hardware_concurrency()), std::nullopt};
  std::size_t instances = 0, violations = 0, unknown = 0;
  std::string per;
  for (const char* id : {"L2.3", "L4.1", "L4.2", "L4.3"}) {
    auto rep = harness::run_suite(id, corpus, opt);
    std::size_t n = 0;
    for (const auto& r : rep.instances)
      if (!r.locator.is_null()) ++n;
    instances += n;
    violations += rep.count(Verdict::violation);
    unknown += rep.count(Verdict::unknown);
    per += std::string(per.empty() ? "" : ", ") + id + " " + std::to_string(n) + " (" +
           std::to_string(rep.count(Verdict::consistent)) + " consistent, " +
           std::to_string(rep.count(Verdict::not_applicable)) + " n/a)";
  }
  report(4, "lemma suites green", violations == 0 && instances >= kLemmaInstances,
         std::to_string(instances) + " instances over " + std::to_string(corpus.size()) +
             " verified members with l in {2,3,4,5} (need " + std::to_string(kLemmaInstances) + "), " +
             std::to_string(violations) + " violations, " + std::to_string(unknown) + " unknown; " + per);
}

void petersen_crossing_jumps() {
  Graph pet = petersen_graph();
  // v1 u1 u3 v3 and v2 u2 u4 v4 over the outer cycle v1..v5.
  std::vector<Vertex> hole{0, 1, 2, 3, 4};
  Jump a = classify_jump(pet, hole, {0, 5, 7, 2});
  Jump b = classify_jump(pet, hole, {1, 6, 8, 3});
  Host host = Host::verify(pet, 2);
  K4Cache cache(pet);
  auto r = check_cross_short_jump(host, a, b, cache);
  bool shape = a.kind == JumpKind::short_jump && b.kind == JumpKind::short_jump && crossing(a, b);
  bool valid = r.subdivision && validate_k4(pet, *r.subdivision);

  // Independent count over every vertex subset of the 10 vertices.
  std::size_t odd = 0, balanced12 = 0, total = 0;
  for (std::uint64_t mask : oracle::k4_subdivisions_by_subsets(pet, 10)) {
    ++total;
    auto h = k4_from_vertex_set(pet, VertexSet::of(oracle::members(mask)));
    if (!h) continue;
    auto kind = classify_k4(pet, *h);
    odd += kind == K4Kind::odd;
    balanced12 += kind == K4Kind::balanced_type_1_2;
  }
  bool disjunction = odd + balanced12 > 0;
  bool agrees = r.outcome == CrossOutcome::odd_k4 ? odd > 0 : balanced12 > 0;
  std::string found = r.subdivision ? std::string(to_string(r.outcome)) + " on branch vertices " +
                                          Json(r.subdivision->branch).dump() + (r.local ? " (local)" : " (global)")
                                    : "nothing";
  report(5, "Petersen crossing short jumps", shape && host.admits_lemmas() && r.verdict == Verdict::consistent &&
                                                 valid && disjunction && agrees,
         "0-5-7-2 x 1-6-8-3 found " + found + "; exhaustive subsets: " + std::to_string(total) +
             " induced K4-subdivisions, " + std::to_string(odd) + " odd, " + std::to_string(balanced12) +
             " balanced type (1,2)");
}

void decompose_members() {
  // Distinct members only; the generator repeats small graphs now and then.
  std::vector<Graph> graphs;
  std::set<std::string> distinct;
  for (const auto& g : gen::member_corpus(5, 2 * kDecomposeGraphs, kDecomposeMinN, kDecomposeMaxN, kSeed))
    if (graphs.size() < kDecomposeGraphs && distinct.insert(to_graph6(g)).second) graphs.push_back(g);
  std::size_t certified = 0, verified = 0, in_range = 0;
  std::map<std::string, std::size_t> outcomes;
  for (const auto& g : graphs) {
    in_range += g.num_vertices() >= kDecomposeMinN && g.num_vertices() <= kDecomposeMaxN;
    auto r = decompose(g, 5);
    if (r.status != DecomposeStatus::certified || !r.certificate) continue;
    ++certified;
    ++outcomes[std::string(to_string(r.certificate->outcome))];
    verified += static_cast<bool>(verify_certificate(g, *r.certificate));
  }
  std::string hist;
  for (const auto& [k, c] : outcomes) hist += (hist.empty() ? "" : ", ") + k + " " + std::to_string(c);
  const std::size_t n = graphs.size();
  report(6, "decompose certifies every G_5 member",
         n >= kDecomposeGraphs && certified == n && verified == n && in_range == n,
         std::to_string(n) + " distinct members (sizes " +
             std::to_string(kDecomposeMinN) + "-" + std::to_string(kDecomposeMaxN) + "), " + std::to_string(certified) +
             " certified, " + std::to_string(verified) + " verified; outcomes {" + hist + "}");
}

void colouring_members() {
  std::vector<std::pair<Graph, int>> pool;
  for (int ell = 5; ell <= 7; ++ell) {
    for (auto& g : fixtures::k4_members(ell, static_cast<std::size_t>(ell + 2))) pool.push_back({g, ell});
    for (auto& g : gen::member_corpus(ell, kColourMembersPerEll, static_cast<std::size_t>(2 * ell + 1), 40, kSeed + ell))
      pool.push_back({g, ell});
  }
  std::size_t members = 0, three = 0, with_odd_k4 = 0, bad = 0;
  for (const auto& [g, ell] : pool) {
    if (!check_membership(g, ell).member()) continue;
    ++members;
    auto c = chromatic_number(g);
    bool ok = c.status == ColoringStatus::exact && c.k <= 3 && verify_certificate(g, c);
    three += ok;
    auto k4 = find_odd_k4(g);
    if (k4.found) {
      ++with_odd_k4;
      if (c.k != 3) ok = false;
    } else if (!k4.proved_absent()) {
      ok = false;
    }
    bad += !ok;
  }
  report(7, "members with l >= 5 are 3-colourable, odd K4 forces chi 3",
         bad == 0 && members == pool.size() && with_odd_k4 > 0,
         std::to_string(members) + " verified members with l in {5,6,7}, " + std::to_string(three) +
             " with a verified colouring in <= 3 colours, " + std::to_string(with_odd_k4) + " contain an odd K4, " +
             std::to_string(bad) + " failures");
}

void cli_determinism() {
  auto run = [](std::vector<std::string> args, const std::string& input) {
    args.insert(args.begin(), "oddhole");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
  };
  std::string corpus;
  for (const auto& g : {petersen_graph(), grotzsch_graph(), gen::odd_cycle(5)}) corpus += to_graph6(g) + "\n";
  for (const auto& g : gen::member_corpus(5, 6, 11, 30, kSeed)) corpus += to_graph6(g) + "\n";
  std::string bundle;
  {
    std::istringstream rep(run({"conjecture", "--id", "same_length_1_4a", "--count", "2"}, ""));
    std::string line;
    while (std::getline(rep, line))
      if (line.find("\"bundle\"") != std::string::npos) bundle = line + "\n";
  }
  std::vector<std::pair<std::vector<std::string>, std::string>> commands{
      {{"membership", "--ell", "2"}, corpus},
      {{"holes"}, corpus},
      {{"holes", "--odd", "--max-len", "9"}, corpus},
      {{"structures", "--find", "k4"}, corpus},
      {{"structures", "--find", "theta", "--ell", "2"}, corpus},
      {{"structures", "--find", "chordal"}, corpus},
      {{"jumps", "--lemmas", "--ell", "2"}, corpus},
      {{"decompose", "--ell", "5"}, corpus},
      {{"color"}, corpus},
      {{"critical", "--k", "4"}, corpus},
      {{"generate", "--kind", "augmented_member", "--ell", "4", "--count", "5", "--seed", "9"}, ""},
      {{"generate", "--kind", "subdivided_k4", "--arrises", "1,3,3,3,3,1"}, ""},
      {{"suite", "--id", "L4.4", "--seed", "4", "--count", "8"}, ""},
      {{"suite", "--id", "T4.6", "--seed", "4", "--count", "8", "--jobs", "3"}, ""},
      {{"conjecture", "--id", "same_length_1_4a", "--count", "4"}, ""},
      {{"replay"}, bundle},
      {{"list"}, ""},
  };
  std::size_t same = 0;
  std::string differing;
  for (const auto& [args, input] : commands) {
    auto a = run(args, input), b = run(args, input);
    if (a == b)
      ++same;
    else
      differing += " " + args[0];
  }
  auto serial = run({"suite", "--id", "L2.3", "--seed", "2", "--count", "12", "--jobs", "1"}, "");
  auto parallel = run({"suite", "--id", "L2.3", "--seed", "2", "--count", "12", "--jobs", "8"}, "");
  bool jobs_ok = serial == parallel;
  report(8, "CLI output is byte-deterministic", same == commands.size() && jobs_ok && !bundle.empty(),
         std::to_string(same) + "/" + std::to_string(commands.size()) + " commands identical on rerun" +
             (differing.empty() ? "" : " (differ:" + differing + ")") + ", jobs 1 vs 8 " +
             (jobs_ok ? "identical" : "differ"));
}

void graph6_round_trip() {
  std::vector<std::string> lines;
  for (const auto& c : harness::member_corpus({2, 3, 4, 5, 6}, 1000, kSeed)) lines.push_back(to_graph6(c.graph));
  Rng rng(kSeed + 9);
  while (lines.size() < kRoundTripLines) {
    std::size_t n = rng.below(4) == 0 ? 63 + rng.below(140) : rng.below(63);
    lines.push_back(to_graph6(oracle::random_graph(n, rng.uniform(), rng)));
  }
  std::string text;
  for (const auto& l : lines) text += l + "\n";
  std::istringstream in(text);
  auto recs = read_graph6_stream(in);
  std::size_t same = 0, big = 0;
  for (std::size_t i = 0; i < recs.size() && i < lines.size(); ++i) {
    same += to_graph6(recs[i].graph) == lines[i];
    big += recs[i].graph.num_vertices() >= 63;
  }
  report(9, "graph6 round trip", recs.size() == lines.size() && same == lines.size() && lines.size() >= kRoundTripLines,
         std::to_string(same) + "/" + std::to_string(lines.size()) + " lines byte-identical (" + std::to_string(big) +
             " with n >= 63)");
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  holes_oracle();
  colouring_oracle();
  golden_values();
  lemma_suites();
  petersen_crossing_jumps();
  decompose_members();
  colouring_members();
  cli_determinism();
  graph6_round_trip();
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << "(" << failures << " failing, " << fmt(seconds_since(start))
            << " s)" << std::endl;
  return failures ? 1 : 0;
}
