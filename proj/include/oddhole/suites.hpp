#pragma once

#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "oddhole/coloring.hpp"
#include "oddhole/cuts.hpp"
#include "oddhole/decompose.hpp"
#include "oddhole/generators.hpp"
#include "oddhole/graph6.hpp"
#include "oddhole/holes.hpp"
#include "oddhole/jumps.hpp"
#include "oddhole/k4.hpp"
#include "oddhole/serialize.hpp"
#include "oddhole/structures.hpp"
#include "oddhole/verify.hpp"

namespace oddhole::harness {

/// A corpus graph with the ℓ it was generated for, if known.
struct CorpusItem {
  Graph graph;
  std::optional<int> ell;
};

/// (g - 1) / 2 for odd girth g >= 5.
inline std::optional<int> ell_from_girth(const Graph& g) {
  auto gi = girth(g);
  if (!gi || *gi < 5 || *gi % 2 == 0) return std::nullopt;
  return static_cast<int>((*gi - 1) / 2);
}

/// Everything one graph's instances share: the host claim, cached odd holes and K4 searches.
class GraphContext {
 public:
  GraphContext(const Graph& g, std::optional<int> ell, bool assume, Budget budget)
      : g_(&g), ell_(ell), budget_(budget), cache_(g, budget) {
    if (ell_) host_ = assume ? Host::assume(g, *ell_) : Host::verify(g, *ell_, budget);
  }

  const Graph& graph() const { return *g_; }
  std::optional<int> ell() const { return ell_; }
  Budget budget() const { return budget_; }
  K4Cache& cache() { return cache_; }
  bool admitted() const { return host_ && host_->admits_lemmas(); }
  const Host& host() const { return *host_; }
  std::string host_mode() const { return host_ ? std::string(to_string(host_->status())) : "none"; }

  const HoleList& odd_holes() {
    if (!holes_) holes_ = oddhole::odd_holes(*g_, budget_);
    return *holes_;
  }

 private:
  const Graph* g_;
  std::optional<int> ell_;
  Budget budget_;
  K4Cache cache_;
  std::optional<Host> host_;
  std::optional<HoleList> holes_;
};

struct Outcome {
  Verdict verdict = Verdict::not_applicable;
  std::string detail;
  Json certificate = nullptr;
};

struct Enumeration {
  std::vector<Json> locators;
  /// Set when some instances may be missing.
  bool truncated = false;
};

struct SuiteDef {
  std::string id;
  std::string summary;
  /// ℓ values of the default corpus.
  std::vector<int> ells;
  /// Instances are only located on verified (or assumed) members.
  bool needs_member = true;
  std::function<Enumeration(GraphContext&)> enumerate;
  std::function<Outcome(GraphContext&, const Json&)> evaluate;
};

namespace detail {

inline Verdict combine(std::initializer_list<Verdict> vs) {
  bool any_consistent = false, any_unknown = false;
  for (Verdict v : vs) {
    if (v == Verdict::violation) return Verdict::violation;
    any_unknown |= v == Verdict::unknown;
    any_consistent |= v == Verdict::consistent;
  }
  if (any_unknown) return Verdict::unknown;
  return any_consistent ? Verdict::consistent : Verdict::not_applicable;
}

inline Enumeration graph_level(GraphContext&) { return {{Json::object()}, false}; }

inline std::vector<Vertex> vertices_of(const Json& j) { return j.get<std::vector<Vertex>>(); }

template <class F>
Enumeration per_jump(GraphContext& ctx, F&& keep) {
  Enumeration e;
  const auto& holes = ctx.odd_holes();
  e.truncated = !holes.complete();
  for (const auto& h : holes.holes) {
    auto js = find_jumps(ctx.graph(), h, ctx.budget());
    e.truncated |= !js.complete();
    for (const auto& j : js.jumps)
      if (keep(j)) e.locators.push_back(Json{{"hole", h.vertices()}, {"path", j.path}});
  }
  return e;
}

inline Jump jump_at(GraphContext& ctx, const Json& loc, const char* key = "path") {
  return classify_jump(ctx.graph(), vertices_of(loc["hole"]), vertices_of(loc[key]));
}

template <class F>
Enumeration per_jump_pair(GraphContext& ctx, F&& keep) {
  Enumeration e;
  const auto& holes = ctx.odd_holes();
  e.truncated = !holes.complete();
  for (const auto& h : holes.holes) {
    auto js = find_jumps(ctx.graph(), h, ctx.budget());
    e.truncated |= !js.complete();
    for (std::size_t i = 0; i < js.jumps.size(); ++i)
      for (std::size_t k = i + 1; k < js.jumps.size(); ++k)
        if (keep(js.jumps[i], js.jumps[k]))
          e.locators.push_back(Json{{"hole", h.vertices()}, {"path1", js.jumps[i].path}, {"path2", js.jumps[k].path}});
  }
  return e;
}

inline Outcome from_extraction(const JumpExtraction& r) {
  Outcome o{r.verdict, r.detail + " after " + std::to_string(r.steps) + " steps"};
  if (r.result) o.certificate = to_json(*r.result);
  return o;
}

/// χ ≤ k on the graph, as an outcome.
inline Outcome colourable_within(const Graph& g, int k, Budget budget) {
  auto r = chromatic_number(g, std::min(k, 8), budget);
  Outcome o;
  o.certificate = to_json(r);
  if (r.status == ColoringStatus::budget_exceeded) {
    o.verdict = Verdict::unknown;
    o.detail = "colouring search exceeded its budget";
  } else if (r.status == ColoringStatus::exceeds_max_k) {
    o.verdict = Verdict::violation;
    o.detail = "not " + std::to_string(k) + "-colourable";
  } else {
    o.verdict = Verdict::consistent;
    o.detail = "chromatic number " + std::to_string(r.k);
  }
  return o;
}

/// Decides k-vertex-criticality; nullopt with `o` filled when undecided.
inline std::optional<bool> critical(const Graph& g, int k, Budget budget, Outcome& o) {
  auto r = is_k_vertex_critical(g, k, budget);
  if (!r.decided) {
    o = {Verdict::unknown, r.reason, nullptr};
    return std::nullopt;
  }
  return r.critical;
}

inline std::vector<SuiteDef> make_suites() {
  std::vector<SuiteDef> s;
  const std::vector<int> small{2, 3, 4, 5};

  s.push_back({"L2.1", "k-vertex-critical graphs (k >= 4) have no 2-edge-cut", {2, 3}, false, graph_level,
               [](GraphContext& ctx, const Json&) -> Outcome {
                 const Graph& g = ctx.graph();
                 if (g.num_vertices() == 0 || !is_connected(g)) return {Verdict::not_applicable, "not connected"};
                 auto chi = chromatic_number(g, 8, ctx.budget());
                 if (chi.status == ColoringStatus::budget_exceeded)
                   return {Verdict::unknown, "colouring search exceeded its budget"};
                 if (chi.status != ColoringStatus::exact || chi.k < 4)
                   return {Verdict::not_applicable, "chromatic number below 4 or above 8"};
                 Outcome o;
                 auto c = critical(g, chi.k, ctx.budget(), o);
                 if (!c) return o;
                 if (!*c) return {Verdict::not_applicable, "not " + std::to_string(chi.k) + "-vertex-critical"};
                 if (auto cut = find_two_edge_cut(g))
                   return {Verdict::violation, "critical graph with a 2-edge-cut", to_json(*cut)};
                 return {Verdict::consistent, std::to_string(chi.k) + "-vertex-critical, no 2-edge-cut"};
               }});

  s.push_back({"L2.2", "4-vertex-critical members have neither K2-cut nor P3-cut", small, true, graph_level,
               [](GraphContext& ctx, const Json&) -> Outcome {
                 const Graph& g = ctx.graph();
                 if (!is_connected(g)) return {Verdict::not_applicable, "not connected"};
                 Outcome o;
                 auto c = critical(g, 4, ctx.budget(), o);
                 if (!c) return o;
                 if (!*c) return {Verdict::not_applicable, "not 4-vertex-critical"};
                 for (int i : {2, 3})
                   if (auto cut = find_path_cut(g, i)) return {Verdict::violation, "critical member with a path cut", to_json(*cut)};
                 return {Verdict::consistent, "4-vertex-critical, no K2-cut or P3-cut"};
               }});

  s.push_back({"L2.3", "chordal paths of odd holes satisfy |P1| = 1 or l >= |P2| < |P1| = |P| >= l+1", small, true,
               [](GraphContext& ctx) {
                 Enumeration e;
                 const auto& holes = ctx.odd_holes();
                 e.truncated = !holes.complete();
                 for (const auto& h : holes.holes) {
                   auto ps = find_chordal_paths(ctx.graph(), h, ctx.budget());
                   e.truncated |= !ps.complete();
                   for (const auto& p : ps.paths) e.locators.push_back(Json{{"hole", h.vertices()}, {"path", p.path.vertices}});
                 }
                 return e;
               },
               [](GraphContext& ctx, const Json& loc) -> Outcome {
                 auto hole = vertices_of(loc["hole"]);
                 auto path = vertices_of(loc["path"]);
                 if (auto c = check_chordal_path(ctx.graph(), hole, path); !c) throw InputError("not a chordal path: " + c.reason);
                 auto cp = make_chordal_path(ctx.graph(), hole, path);
                 auto r = check_easy_case(*ctx.ell(), cp);
                 return {r.verdict, std::string(to_string(r.branch)) + " |P|=" + std::to_string(r.p) + " |P1|=" +
                                        std::to_string(r.p1) + " |P2|=" + std::to_string(r.p2),
                         to_json(cp)};
               }});

  s.push_back({"theta_pair", "two odd holes forming a non-induced theta differ in 4l edges and span an odd K4",
               small, true,
               [](GraphContext& ctx) {
                 Enumeration e;
                 const auto& holes = ctx.odd_holes();
                 e.truncated = !holes.complete();
                 for (std::size_t i = 0; i < holes.holes.size(); ++i)
                   for (std::size_t k = i + 1; k < holes.holes.size(); ++k)
                     if (theta_split(holes.holes[i].vertices(), holes.holes[k].vertices()))
                       e.locators.push_back(Json{{"c1", holes.holes[i].vertices()}, {"c2", holes.holes[k].vertices()}});
                 return e;
               },
               [](GraphContext& ctx, const Json& loc) -> Outcome {
                 auto r = check_theta_pair(ctx.host(), vertices_of(loc["c1"]), vertices_of(loc["c2"]));
                 return {r.verdict, r.reason, to_json(r)};
               }});

  s.push_back({"4ell_chords", "a 4l-cycle has at most two chords, and two chords make an odd K4", small, true,
               [](GraphContext& ctx) {
                 Enumeration e;
                 BudgetMeter meter(ctx.budget());
                 auto st = for_each_cycle_of_length(ctx.graph(), static_cast<std::size_t>(4 * *ctx.ell()), meter,
                                                    [&](const std::vector<Vertex>& c) {
                                                      e.locators.push_back(Json{{"cycle", c}});
                                                      return true;
                                                    });
                 e.truncated = st == SearchStatus::budget_exceeded;
                 return e;
               },
               [](GraphContext& ctx, const Json& loc) -> Outcome {
                 auto r = check_4ell_hole_chords(ctx.host(), vertices_of(loc["cycle"]));
                 Outcome o{r.verdict, std::to_string(r.chords) + " chords" + (r.reason.empty() ? "" : ", " + r.reason)};
                 if (r.subdivision) o.certificate = to_json(*r.subdivision);
                 return o;
               }});

  s.push_back({"L3.1", "claims on balanced K4-subdivisions of members", small, true,
               [](GraphContext& ctx) {
                 Enumeration e;
                 BudgetMeter meter(ctx.budget());
                 auto st = for_each_k4_subdivision(ctx.graph(), true, meter, [&](const K4Subdivision& h) {
                   if (h.kind == K4Kind::balanced || h.kind == K4Kind::balanced_type_1_2)
                     e.locators.push_back(Json{{"vertices", h.vertex_set().to_vector()}});
                   return true;
                 });
                 e.truncated = st == SearchStatus::budget_exceeded;
                 return e;
               },
               [](GraphContext& ctx, const Json& loc) -> Outcome {
                 auto h = k4_from_vertex_set(ctx.graph(), VertexSet::of(vertices_of(loc["vertices"])));
                 if (!h || (h->kind != K4Kind::balanced && h->kind != K4Kind::balanced_type_1_2))
                   throw InputError("vertices do not induce a balanced K4-subdivision");
                 auto r = lemma_odd_k4_check(ctx.host(), *h, ctx.budget());
                 Json cert{{"subdivision", to_json(*h)},
                           {"claims", {to_json(r.claim1), to_json(r.claim2), to_json(r.claim3)}}};
                 return {combine({r.claim1.verdict, r.claim2.verdict, r.claim3.verdict}),
                         "claims: " + std::string(to_string(r.claim1.verdict)) + ", " +
                             std::string(to_string(r.claim2.verdict)) + ", " + std::string(to_string(r.claim3.verdict)),
                         cert};
               }});

  s.push_back({"T3.2", "4-vertex-critical members (l >= 5) have no balanced K4 of type (1,2)", {5}, true, graph_level,
               [](GraphContext& ctx, const Json&) -> Outcome {
                 if (*ctx.ell() < 5) return {Verdict::not_applicable, "needs ell >= 5"};
                 Outcome o;
                 auto c = critical(ctx.graph(), 4, ctx.budget(), o);
                 if (!c) return o;
                 if (!*c) return {Verdict::not_applicable, "not 4-vertex-critical"};
                 const auto& bal = ctx.cache().balanced_type_1_2();
                 if (bal.found) return {Verdict::violation, "critical member with a type (1,2) subdivision", to_json(*bal.found)};
                 if (!bal.proved_absent()) return {Verdict::unknown, "subdivision search exceeded its budget"};
                 return {Verdict::consistent, "no balanced type (1,2) subdivision"};
               }});

  s.push_back({"L4.1", "a short or local jump across Q1 makes P Q2 an even hole", small, true,
               [](GraphContext& ctx) { return per_jump(ctx, [](const Jump& j) { return j.kind != JumpKind::other; }); },
               [](GraphContext& ctx, const Json& loc) -> Outcome {
                 Jump j = jump_at(ctx, loc);
                 auto r = jump_parity_check(ctx.host(), j);
                 return {r.verdict, r.detail, to_json(j)};
               }});

  s.push_back({"L4.2", "a jump that is neither short nor local contains a short jump", small, true,
               [](GraphContext& ctx) { return per_jump(ctx, [](const Jump& j) { return j.kind == JumpKind::other; }); },
               [](GraphContext& ctx, const Json& loc) -> Outcome {
                 return from_extraction(extract_short_jump(ctx.host(), ctx.graph(), jump_at(ctx, loc)));
               }});

  s.push_back({"L4.3", "a local jump contains a local jump across one vertex or a short jump", small, true,
               [](GraphContext& ctx) { return per_jump(ctx, [](const Jump& j) { return j.kind == JumpKind::local; }); },
               [](GraphContext& ctx, const Json& loc) -> Outcome {
                 return from_extraction(extract_local_one_or_short(ctx.host(), ctx.graph(), jump_at(ctx, loc)));
               }});

  s.push_back({"L4.4", "crossing short jumps give an odd or a balanced type (1,2) K4-subdivision", small, true,
               [](GraphContext& ctx) {
                 return per_jump_pair(ctx, [](const Jump& a, const Jump& b) {
                   return a.kind == JumpKind::short_jump && b.kind == JumpKind::short_jump && crossing(a, b);
                 });
               },
               [](GraphContext& ctx, const Json& loc) -> Outcome {
                 auto r = check_cross_short_jump(ctx.host(), jump_at(ctx, loc, "path1"), jump_at(ctx, loc, "path2"),
                                                 ctx.cache(), ctx.budget());
                 Outcome o{r.verdict, r.detail};
                 if (r.subdivision) o.certificate = Json{{"outcome", to_string(r.outcome)}, {"local", r.local},
                                                         {"subdivision", to_json(*r.subdivision)}};
                 return o;
               }});

  s.push_back({"L4.5", "uncrossing jumps: two short jumps give an odd K4; few across-side vertices miss jump holes",
               {4, 5}, true,
               [](GraphContext& ctx) {
                 if (*ctx.ell() < 4) return Enumeration{};
                 return per_jump_pair(ctx, [](const Jump& a, const Jump& b) {
                   return static_cast<bool>(check_uncrossing_hypotheses(a, b));
                 });
               },
               [](GraphContext& ctx, const Json& loc) -> Outcome {
                 auto r = check_uncrossing_jumps(ctx.host(), jump_at(ctx, loc, "path1"), jump_at(ctx, loc, "path2"),
                                                 ctx.cache(), ctx.budget());
                 Json cert{{"claims", {to_json(r.claim1), to_json(r.claim2)}}, {"uncovered", r.uncovered}};
                 cert["subdivision"] = r.subdivision ? to_json(*r.subdivision) : Json(nullptr);
                 return {combine({r.claim1.verdict, r.claim2.verdict}),
                         "claim1 " + r.claim1.detail + "; claim2 " + r.claim2.detail, cert};
               }});

  s.push_back({"T4.6", "members (l >= 5) have an odd K4, a type (1,2) K4, a P3-cut or a degree-2 vertex", {5}, true,
               graph_level, [](GraphContext& ctx, const Json&) -> Outcome {
                 auto r = decompose(ctx.graph(), *ctx.ell(), ctx.budget());
                 switch (r.status) {
                   case DecomposeStatus::not_applicable: return {Verdict::not_applicable, r.detail};
                   case DecomposeStatus::unknown: return {Verdict::unknown, r.detail};
                   case DecomposeStatus::violation: return {Verdict::violation, r.detail, to_json(r)};
                   case DecomposeStatus::certified: break;
                 }
                 if (auto c = verify_certificate(ctx.graph(), *r.certificate); !c)
                   return {Verdict::violation, "certificate failed verification: " + c.reason, to_json(r)};
                 return {Verdict::consistent, std::string(to_string(r.certificate->outcome)), to_json(*r.certificate)};
               }});

  s.push_back({"T5.1", "members with l >= 5 are 3-colourable", {5}, true, graph_level,
               [](GraphContext& ctx, const Json&) -> Outcome {
                 if (*ctx.ell() < 5) return {Verdict::not_applicable, "needs ell >= 5"};
                 return colourable_within(ctx.graph(), 3, ctx.budget());
               }});

  s.push_back({"T1.2", "members with l >= 5 and an odd K4-subdivision have chromatic number 3", {5}, true,
               graph_level, [](GraphContext& ctx, const Json&) -> Outcome {
                 if (*ctx.ell() < 5) return {Verdict::not_applicable, "needs ell >= 5"};
                 const auto& odd = ctx.cache().odd();
                 if (odd.status == SearchStatus::budget_exceeded && !odd.found)
                   return {Verdict::unknown, "odd K4-subdivision search exceeded its budget"};
                 if (!odd.found) return {Verdict::not_applicable, "no odd K4-subdivision"};
                 auto o = colourable_within(ctx.graph(), 3, ctx.budget());
                 if (o.verdict == Verdict::consistent && o.certificate["k"] != 3) {
                   o.verdict = Verdict::violation;
                   o.detail = "chromatic number " + o.certificate["k"].dump();
                 }
                 return o;
               }});
  return s;
}

inline std::vector<SuiteDef> make_conjectures() {
  std::vector<SuiteDef> s;
  const std::vector<int> ells{2, 3, 4, 5};
  s.push_back({"wu_xu_xu_1_3", "every member of some G_l is 3-colourable", ells, true, graph_level,
               [](GraphContext& ctx, const Json&) { return colourable_within(ctx.graph(), 3, ctx.budget()); }});
  s.push_back({"same_length_1_4a", "triangle-free graphs whose odd holes share one length are 3-colourable", ells,
               false, graph_level, [](GraphContext& ctx, const Json&) -> Outcome {
                 const Graph& g = ctx.graph();
                 if (girth(g) == 3u) return {Verdict::not_applicable, "has a triangle"};
                 auto spec = odd_hole_spectrum(g, ctx.budget());
                 if (spec.budget_state != BudgetState::within) return {Verdict::unknown, "hole enumeration exceeded its budget"};
                 if (spec.odd_lengths.size() > 1)
                   return {Verdict::not_applicable, std::to_string(spec.odd_lengths.size()) + " odd hole lengths"};
                 return colourable_within(g, 3, ctx.budget());
               }});
  s.push_back({"k_lengths_1_4b", "odd girth 2l+1 with k odd hole lengths gives a (k+2)-colouring", ells, false,
               graph_level, [](GraphContext& ctx, const Json&) -> Outcome {
                 const Graph& g = ctx.graph();
                 if (!ell_from_girth(g)) return {Verdict::not_applicable, "girth is not odd and at least 5"};
                 auto spec = odd_hole_spectrum(g, ctx.budget());
                 if (spec.budget_state != BudgetState::within) return {Verdict::unknown, "hole enumeration exceeded its budget"};
                 int k = static_cast<int>(spec.odd_lengths.size());
                 auto o = colourable_within(g, k + 2, ctx.budget());
                 o.detail = std::to_string(k) + " odd hole lengths, " + o.detail;
                 return o;
               }});
  return s;
}

}  // namespace detail

inline const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> s = detail::make_suites();
  return s;
}

inline const std::vector<SuiteDef>& conjectures() {
  static const std::vector<SuiteDef> s = detail::make_conjectures();
  return s;
}

/// Looks a suite or conjecture up by id.
inline const SuiteDef& find_suite(std::string_view id) {
  for (const auto* list : {&suites(), &conjectures()})
    for (const auto& d : *list)
      if (d.id == id) return d;
  throw InputError("unknown suite or conjecture '" + std::string(id) + "'");
}

struct InstanceRecord {
  std::size_t graph_index = 0;
  Json locator;
  Outcome outcome;
  /// Standalone reproduction bundle, set for violations.
  Json bundle;
};

struct SuiteOptions {
  Budget budget;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  /// Treat every graph as a member of G_ℓ for this ℓ without checking (negative controls).
  std::optional<int> assume_ell;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  Budget budget;
  std::size_t graphs = 0;
  std::vector<InstanceRecord> instances;
  std::array<std::size_t, 4> counts{};
  double wall_seconds = 0;

  std::size_t count(Verdict v) const { return counts[static_cast<std::size_t>(v)]; }
};

inline Json make_bundle(const SuiteDef& def, const Graph& g, GraphContext& ctx, const Json& locator, const Outcome& o,
                        Budget budget) {
  Json b{{"suite", def.id}, {"graph6", to_graph6(g)}};
  b["ell"] = ctx.ell() ? Json(*ctx.ell()) : Json(nullptr);
  b["host"] = ctx.host_mode();
  b["budget"] = budget.max_nodes;
  b["locator"] = locator;
  b["verdict"] = to_string(o.verdict);
  b["detail"] = o.detail;
  b["certificate"] = o.certificate;
  return b;
}

/// All instances of one graph, in enumeration order.
inline std::vector<InstanceRecord> run_graph(const SuiteDef& def, const CorpusItem& item, std::size_t index,
                                             const SuiteOptions& opt) {
  std::vector<InstanceRecord> out;
  std::optional<int> ell = opt.assume_ell ? opt.assume_ell : item.ell ? item.ell : ell_from_girth(item.graph);
  GraphContext ctx(item.graph, ell, opt.assume_ell.has_value(), opt.budget);
  auto record = [&](Json loc, Outcome o) {
    InstanceRecord r{index, std::move(loc), std::move(o), nullptr};
    if (r.outcome.verdict == Verdict::violation) r.bundle = make_bundle(def, item.graph, ctx, r.locator, r.outcome, opt.budget);
    out.push_back(std::move(r));
  };
  if (def.needs_member && !ctx.admitted()) {
    record(nullptr, {ctx.ell() && ctx.host().status() == Host::Status::unknown ? Verdict::unknown : Verdict::not_applicable,
                     ctx.ell() ? "host is " + ctx.host_mode() : "no candidate ell"});
    return out;
  }
  auto e = def.enumerate(ctx);
  for (const auto& loc : e.locators) record(loc, def.evaluate(ctx, loc));
  if (e.truncated) record(nullptr, {Verdict::unknown, "instance enumeration exceeded its budget"});
  if (out.empty()) record(nullptr, {Verdict::not_applicable, "no instances"});
  return out;
}

/// Runs a suite over a corpus. Graphs are spread over `jobs` threads and merged in input order.
inline SuiteReport run_suite(const SuiteDef& def, const std::vector<CorpusItem>& corpus, const SuiteOptions& opt) {
  if (corpus.empty()) throw InputError("corpus is empty");
  auto start = std::chrono::steady_clock::now();
  std::vector<std::vector<InstanceRecord>> per(corpus.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) {
      try {
        per[i] = run_graph(def, corpus[i], i, opt);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(corpus.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  SuiteReport rep;
  rep.suite = def.id;
  rep.seed = opt.seed;
  rep.budget = opt.budget;
  rep.graphs = corpus.size();
  for (auto& v : per)
    for (auto& r : v) {
      ++rep.counts[static_cast<std::size_t>(r.outcome.verdict)];
      rep.instances.push_back(std::move(r));
    }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline SuiteReport run_suite(std::string_view id, const std::vector<CorpusItem>& corpus, const SuiteOptions& opt) {
  return run_suite(find_suite(id), corpus, opt);
}

inline Json to_json(const InstanceRecord& r, const std::string& suite) {
  Json j{{"type", "instance"}, {"suite", suite}, {"graph_index", r.graph_index}, {"locator", r.locator},
         {"verdict", to_string(r.outcome.verdict)}, {"detail", r.outcome.detail}, {"certificate", r.outcome.certificate}};
  if (!r.bundle.is_null()) j["bundle"] = r.bundle;
  return j;
}

inline Json summary_json(const SuiteReport& rep, bool timing) {
  Json counts;
  for (Verdict v : {Verdict::consistent, Verdict::violation, Verdict::not_applicable, Verdict::unknown})
    counts[std::string(to_string(v))] = rep.count(v);
  Json j{{"type", "summary"}, {"suite", rep.suite},          {"seed", rep.seed},
         {"budget", {{"max_nodes", rep.budget.max_nodes}}},  {"graphs", rep.graphs},
         {"instances", rep.instances.size()},                {"counts", counts}};
  if (timing) j["wall_time_s"] = rep.wall_seconds;
  return j;
}

/// One line per instance, then the summary line.
inline void write_report(std::ostream& out, const SuiteReport& rep, bool timing) {
  for (const auto& r : rep.instances) out << to_json(r, rep.suite).dump() << '\n';
  out << summary_json(rep, timing).dump() << '\n';
}

/// Verified members for the given ℓ values: the seeds, Petersen for ℓ = 2, and grown members with
/// 2ℓ+1 to min(40, 6ℓ+10) vertices.
inline std::vector<CorpusItem> member_corpus(const std::vector<int>& ells, std::size_t per_ell, std::uint64_t seed) {
  std::vector<CorpusItem> out;
  for (int ell : ells) {
    if (ell == 2) out.push_back({petersen_graph(), 2});
    for (auto& g : gen::member_seeds(ell)) out.push_back({g, ell});
    auto lo = static_cast<std::size_t>(2 * ell + 1);
    auto hi = std::min<std::size_t>(40, static_cast<std::size_t>(6 * ell + 10));
    for (auto& g : gen::member_corpus(ell, per_ell, lo, hi, seed + static_cast<std::uint64_t>(ell)))
      out.push_back({std::move(g), ell});
  }
  return out;
}

/// The corpus a suite runs on when none is given. L2.1 also gets the named critical graphs and the
/// conjectures the Grötzsch graph, which has no ℓ.
inline std::vector<CorpusItem> default_corpus(const SuiteDef& def, std::size_t per_ell, std::uint64_t seed) {
  std::vector<CorpusItem> out;
  if (def.id == "L2.1" || def.id.find('_') != std::string::npos)
    for (auto name : {"grotzsch", "wheel_5", "wheel_7"}) out.push_back({gen::named(name), std::nullopt});
  for (auto& c : member_corpus(def.ells, per_ell, seed)) out.push_back(std::move(c));
  return out;
}

struct ReplayResult {
  Verdict expected = Verdict::violation;
  Verdict actual = Verdict::not_applicable;
  std::string detail;
  bool reproduced() const { return expected == actual; }
};

/// Re-evaluates the bundled instance from its graph6 text alone.
inline ReplayResult replay(const Json& bundle) {
  const auto& def = find_suite(bundle.at("suite").get<std::string>());
  Graph g = from_graph6(bundle.at("graph6").get<std::string>());
  std::optional<int> ell;
  if (!bundle.at("ell").is_null()) ell = bundle.at("ell").get<int>();
  std::string host = bundle.at("host").get<std::string>();
  Budget budget{bundle.at("budget").get<std::uint64_t>()};
  GraphContext ctx(g, ell, host == "assumed", budget);
  ReplayResult r;
  r.expected = verdict_from_string(bundle.at("verdict").get<std::string>());
  const Json& loc = bundle.at("locator");
  Outcome o;
  if (loc.is_null())
    o = run_graph(def, CorpusItem{g, ell}, 0, SuiteOptions{budget, 0, 1, host == "assumed" ? ell : std::nullopt})
            .front()
            .outcome;
  else if (def.needs_member && !ctx.admitted())
    o = {Verdict::not_applicable, "host is " + ctx.host_mode()};
  else
    o = def.evaluate(ctx, loc);
  r.actual = o.verdict;
  r.detail = o.detail;
  return r;
}

}  // namespace oddhole::harness
