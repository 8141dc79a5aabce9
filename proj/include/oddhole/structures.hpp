#pragma once

#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "oddhole/graph.hpp"
#include "oddhole/holes.hpp"
#include "oddhole/k4.hpp"

namespace oddhole {

/// The two (s,t)-paths of a cycle: first walks forward through the sequence, second backward.
inline std::pair<std::vector<Vertex>, std::vector<Vertex>> cycle_paths_between(const std::vector<Vertex>& cyc, Vertex s,
                                                                             Vertex t) {
  const std::size_t n = cyc.size();
  auto is = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), s) - cyc.begin());
  auto it = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), t) - cyc.begin());
  if (is == n || it == n || is == it) throw InputError("cycle path ends must be distinct cycle vertices");
  std::vector<Vertex> fwd, bwd;
  for (std::size_t i = is;; i = (i + 1) % n) {
    fwd.push_back(cyc[i]);
    if (i == it) break;
  }
  for (std::size_t i = is;; i = (i + n - 1) % n) {
    bwd.push_back(cyc[i]);
    if (i == it) break;
  }
  return {std::move(fwd), std::move(bwd)};
}

/// P with C ∪ P an induced theta subgraph. p1, p2 are the (s,t)-paths of C with |p1| ≡ |P| (mod 2)
/// when C is odd; for even C, p1 is the forward path.
struct ChordalPath {
  std::vector<Vertex> hole;
  Path path;
  std::vector<Vertex> p1, p2;

  Vertex s() const { return path.front(); }
  Vertex t() const { return path.back(); }
  std::size_t len_p() const { return path.length(); }
  std::size_t len_p1() const { return p1.size() - 1; }
  std::size_t len_p2() const { return p2.size() - 1; }
};

inline ChordalPath make_chordal_path(const Graph& g, const std::vector<Vertex>& hole, std::vector<Vertex> path) {
  ChordalPath cp;
  cp.hole = hole;
  auto [fwd, bwd] = cycle_paths_between(hole, path.front(), path.back());
  const std::size_t len = path.size() - 1;
  if ((fwd.size() - 1) % 2 == len % 2 || (bwd.size() - 1) % 2 != len % 2) {
    cp.p1 = std::move(fwd);
    cp.p2 = std::move(bwd);
  } else {
    cp.p1 = std::move(bwd);
    cp.p2 = std::move(fwd);
  }
  cp.path = make_path(g, std::move(path));
  return cp;
}

/// True iff G[V(C ∪ P)] is exactly the theta C ∪ P. P may have the chord st when s and t are
/// consecutive on C.
inline Check check_chordal_path(const Graph& g, const std::vector<Vertex>& hole, const std::vector<Vertex>& path) {
  if (!is_hole(g, hole)) return Check::fail("C is not a hole");
  if (path.size() < 2) return Check::fail("path has no edge");
  if (auto c = check_path(g, path, false); !c) return Check::fail("path: " + std::string(to_string(c.defect)));
  VertexSet cv = VertexSet::of(hole);
  if (!cv.contains(path.front()) || !cv.contains(path.back())) return Check::fail("ends not on C");
  for (std::size_t i = 1; i + 1 < path.size(); ++i)
    if (cv.contains(path[i])) return Check::fail("interior meets C");
  if (path.size() == 2) return Check::fail("a chord is not a chordal path");
  VertexSet all = cv | VertexSet::of(path);
  std::size_t inside = 0;
  all.for_each([&](Vertex v) { inside += (g.neighborhood(v) & all).size(); });
  if (inside / 2 != hole.size() + path.size() - 1) return Check::fail("C ∪ P is not induced");
  return Check::pass();
}

struct ChordalPathList {
  std::vector<ChordalPath> paths;  // sorted by (s, t, length, sequence)
  BudgetState budget_state = BudgetState::within;
  std::uint64_t nodes = 0;
  bool complete() const { return budget_state == BudgetState::within; }
};

/// Calls visit(const std::vector<Vertex>&) with every chordal path of the hole, oriented from its
/// smaller end. With nonadjacent_ends the ends must be nonadjacent (these are the short jumps).
template <class Visitor>
SearchStatus for_each_chordal_path(const Graph& g, const std::vector<Vertex>& hole, bool nonadjacent_ends,
                                   BudgetMeter& meter, Visitor&& visit) {
  const VertexSet cv = VertexSet::of(hole);
  bool done = false, exceeded = false, stopped = false;
  std::vector<Vertex> path;
  auto contacts = [&](Vertex x) { return g.neighborhood(x) & cv; };
  auto closes = [&](Vertex s, Vertex t) { return t > s && !(nonadjacent_ends && g.adjacent(s, t)); };

  auto extend = [&](auto&& self, const VertexSet& forbidden) -> void {
    if (!meter.tick()) {
      exceeded = done = true;
      return;
    }
    const Vertex s = path.front();
    const Vertex tip = path.back();
    VertexSet child_forbidden = forbidden | g.neighborhood(tip);
    child_forbidden.insert(tip);
    VertexSet cand = g.neighborhood(tip) - cv - forbidden;
    cand.for_each([&](Vertex x) {
      if (done) return;
      VertexSet touch = contacts(x);
      if (touch.empty()) {
        path.push_back(x);
        self(self, child_forbidden);
        path.pop_back();
      } else if (touch.size() == 1) {
        Vertex t = *touch.first();
        if (t == s || !closes(s, t)) return;
        path.push_back(x);
        path.push_back(t);
        if (!visit(std::as_const(path))) stopped = done = true;
        path.pop_back();
        path.pop_back();
      }
    });
  };

  for (Vertex s : VertexSet::of(hole).to_vector()) {
    if (done) break;
    for (Vertex x1 : g.neighbors(s)) {
      if (done) break;
      if (cv.contains(x1)) continue;
      VertexSet touch = contacts(x1);
      if (!touch.contains(s)) continue;
      touch.erase(s);
      if (touch.empty()) {
        path.assign({s, x1});
        VertexSet forbidden = g.neighborhood(s);
        forbidden.insert(s);
        extend(extend, forbidden);
      } else if (touch.size() == 1) {
        Vertex t = *touch.first();
        if (!closes(s, t)) continue;
        path.assign({s, x1, t});
        if (!visit(std::as_const(path))) stopped = done = true;
      }
    }
  }
  if (exceeded) return SearchStatus::budget_exceeded;
  return stopped ? SearchStatus::stopped : SearchStatus::complete;
}

inline bool chordal_order(const ChordalPath& a, const ChordalPath& b) {
  if (a.s() != b.s()) return a.s() < b.s();
  if (a.t() != b.t()) return a.t() < b.t();
  if (a.len_p() != b.len_p()) return a.len_p() < b.len_p();
  return a.path.vertices < b.path.vertices;
}

inline ChordalPathList find_chordal_paths(const Graph& g, const std::vector<Vertex>& hole, Budget budget = {}) {
  if (!is_hole(g, hole)) throw InputError("C is not a hole of g");
  BudgetMeter meter(budget);
  ChordalPathList out;
  for_each_chordal_path(g, hole, false, meter, [&](const std::vector<Vertex>& p) {
    out.paths.push_back(make_chordal_path(g, hole, p));
    return true;
  });
  std::sort(out.paths.begin(), out.paths.end(), chordal_order);
  out.budget_state = meter.state();
  out.nodes = meter.used();
  return out;
}

inline ChordalPathList find_chordal_paths(const Graph& g, const Hole& c, Budget budget = {}) {
  return find_chordal_paths(g, c.vertices(), budget);
}

enum class EasyCaseBranch { p1_is_edge, long_path, none };

inline std::string_view to_string(EasyCaseBranch b) {
  switch (b) {
    case EasyCaseBranch::p1_is_edge: return "p1_is_edge";
    case EasyCaseBranch::long_path: return "long_path";
    case EasyCaseBranch::none: return "none";
  }
  return "none";
}

struct EasyCaseResult {
  Verdict verdict = Verdict::consistent;
  EasyCaseBranch branch = EasyCaseBranch::none;
  std::size_t p = 0, p1 = 0, p2 = 0;
  int ell = 2;
};

/// |P1| = 1, or ℓ ≥ |P2| < |P1| = |P| ≥ ℓ+1, evaluated on the lengths alone.
inline EasyCaseResult check_easy_case(int ell, std::size_t p, std::size_t p1, std::size_t p2) {
  if (p % 2 != p1 % 2) throw InputError("|P1| and |P| must have the same parity");
  if ((p1 + p2) % 2 == 0) throw InputError("the hole must be odd");
  EasyCaseResult r{Verdict::consistent, EasyCaseBranch::none, p, p1, p2, ell};
  const auto l = static_cast<std::size_t>(ell);
  if (p1 == 1)
    r.branch = EasyCaseBranch::p1_is_edge;
  else if (l >= p2 && p2 < p1 && p1 == p && p >= l + 1)
    r.branch = EasyCaseBranch::long_path;
  else
    r.verdict = Verdict::violation;
  return r;
}

inline EasyCaseResult check_easy_case(int ell, const ChordalPath& cp) {
  return check_easy_case(ell, cp.len_p(), cp.len_p1(), cp.len_p2());
}

/// Two cycles sharing one path R = (x..y) and otherwise disjoint.
struct ThetaSplit {
  std::vector<Vertex> shared;  // x .. y
  std::vector<Vertex> rest1;   // x .. y along the first cycle
  std::vector<Vertex> rest2;   // x .. y along the second cycle
};

inline std::optional<ThetaSplit> theta_split(const std::vector<Vertex>& c1, const std::vector<Vertex>& c2) {
  VertexSet s = VertexSet::of(c1) & VertexSet::of(c2);
  if (s.size() < 2 || s.size() >= c1.size() || s.size() >= c2.size()) return std::nullopt;
  // The shared vertices must form one arc of c1: find its start (a shared vertex whose predecessor is not).
  const std::size_t n1 = c1.size();
  std::size_t start = n1;
  for (std::size_t i = 0; i < n1; ++i)
    if (s.contains(c1[i]) && !s.contains(c1[(i + n1 - 1) % n1])) {
      if (start != n1) return std::nullopt;
      start = i;
    }
  if (start == n1) return std::nullopt;
  std::vector<Vertex> arc;
  for (std::size_t k = 0; k < s.size(); ++k) {
    Vertex v = c1[(start + k) % n1];
    if (!s.contains(v)) return std::nullopt;
    arc.push_back(v);
  }
  Vertex x = arc.front(), y = arc.back();
  auto [f1, b1] = cycle_paths_between(c1, x, y);
  auto [f2, b2] = cycle_paths_between(c2, x, y);
  ThetaSplit t;
  t.shared = arc;
  t.rest1 = f1 == arc ? b1 : f1;
  if (f2 == arc)
    t.rest2 = b2;
  else if (b2 == arc)
    t.rest2 = f2;
  else
    return std::nullopt;
  return t;
}

struct ThetaPairResult {
  Verdict verdict = Verdict::not_applicable;
  bool induced = false;
  std::size_t sym_diff = 0;
  std::optional<K4Subdivision> subdivision;
  std::string reason;
};

/// Two odd holes forming a theta: when their union is not induced, |C1 Δ C2| = 4ℓ and
/// G[V(C1 ∪ C2)] is an odd K4-subdivision.
inline ThetaPairResult check_theta_pair(const Host& host, const std::vector<Vertex>& c1, const std::vector<Vertex>& c2) {
  const Graph& g = host.graph();
  if (canonical_cycle(c1) == canonical_cycle(c2)) throw InputError("the two holes coincide");
  if (!is_hole(g, c1) || !is_hole(g, c2) || c1.size() % 2 == 0 || c2.size() % 2 == 0)
    throw InputError("theta pair needs two odd holes");
  auto split = theta_split(c1, c2);
  if (!split) throw InputError("the holes do not form a theta");
  ThetaPairResult r;
  r.sym_diff = split->rest1.size() - 1 + split->rest2.size() - 1;
  VertexSet all = VertexSet::of(c1) | VertexSet::of(c2);
  std::size_t inside = 0;
  all.for_each([&](Vertex v) { inside += (g.neighborhood(v) & all).size(); });
  r.induced = inside / 2 == split->shared.size() - 1 + r.sym_diff;
  if (!host.admits_lemmas()) {
    r.reason = "host is not a member";
    return r;
  }
  if (r.induced) {
    r.verdict = Verdict::consistent;
    r.reason = "union is induced";
    return r;
  }
  r.subdivision = k4_from_vertex_set(g, all);
  if (r.sym_diff != static_cast<std::size_t>(4 * host.ell())) {
    r.verdict = Verdict::violation;
    r.reason = "symmetric difference is " + std::to_string(r.sym_diff);
  } else if (!r.subdivision || r.subdivision->kind != K4Kind::odd) {
    r.verdict = Verdict::violation;
    r.reason = "union does not induce an odd K4-subdivision";
  } else {
    r.verdict = Verdict::consistent;
    r.reason = "odd K4-subdivision";
  }
  return r;
}

struct FourEllResult {
  Verdict verdict = Verdict::not_applicable;
  std::size_t chords = 0;
  std::optional<K4Subdivision> subdivision;
  std::string reason;
};

/// A cycle of length 4ℓ has at most two chords, and with two chords G[V(C)] is an odd K4-subdivision.
inline FourEllResult check_4ell_hole_chords(const Host& host, const std::vector<Vertex>& cycle) {
  const Graph& g = host.graph();
  check_vertices(g, cycle);
  if (!is_cycle(g, cycle)) throw InputError("not a cycle of g");
  if (cycle.size() != static_cast<std::size_t>(4 * host.ell()))
    throw InputError("cycle length " + std::to_string(cycle.size()) + " is not 4ℓ");
  FourEllResult r;
  r.chords = cycle_chords(g, cycle).size();
  if (!host.admits_lemmas()) {
    r.reason = "host is not a member";
    return r;
  }
  if (r.chords > 2) {
    r.verdict = Verdict::violation;
    r.reason = std::to_string(r.chords) + " chords";
  } else if (r.chords == 2) {
    r.subdivision = k4_from_vertex_set(g, VertexSet::of(cycle));
    bool odd = r.subdivision && r.subdivision->kind == K4Kind::odd;
    r.verdict = odd ? Verdict::consistent : Verdict::violation;
    r.reason = odd ? "odd K4-subdivision" : "two chords without an odd K4-subdivision";
  } else {
    r.verdict = Verdict::consistent;
    r.reason = std::to_string(r.chords) + " chords";
  }
  return r;
}

/// Calls visit(const std::vector<Vertex>&) with every cycle of exactly `length` vertices, in
/// canonical form (least vertex first, then its smaller neighbour).
template <class Visitor>
SearchStatus for_each_cycle_of_length(const Graph& g, std::size_t length, BudgetMeter& meter, Visitor&& visit) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  bool done = false, exceeded = false, stopped = false;
  std::vector<Vertex> path;
  VertexSet on_path;
  std::vector<int> dist(g.num_vertices());
  for (Vertex a = 0; a < n && !done && length >= 3; ++a) {
    VertexSet allowed = VertexSet::range(a, n);
    // Distances back to a inside the allowed region bound the remaining length.
    std::fill(dist.begin(), dist.end(), -1);
    dist[a] = 0;
    std::deque<Vertex> q{a};
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (Vertex w : g.neighbors(u))
        if (w > a && dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
    }
    auto rec = [&](auto&& self) -> void {
      if (!meter.tick()) {
        exceeded = done = true;
        return;
      }
      Vertex tip = path.back();
      if (path.size() == length) {
        if (g.adjacent(tip, a) && path[1] < tip && !visit(std::as_const(path))) stopped = done = true;
        return;
      }
      VertexSet cand = (g.neighborhood(tip) & allowed) - on_path;
      cand.for_each([&](Vertex x) {
        if (done || dist[x] < 0) return;
        if (path.size() + static_cast<std::size_t>(dist[x]) > length) return;
        path.push_back(x);
        on_path.insert(x);
        self(self);
        on_path.erase(x);
        path.pop_back();
      });
    };
    path.assign({a});
    on_path = VertexSet{a};
    rec(rec);
  }
  if (exceeded) return SearchStatus::budget_exceeded;
  return stopped ? SearchStatus::stopped : SearchStatus::complete;
}

enum class ClaimId { one, two, three };

struct ClaimVerdict {
  Verdict verdict = Verdict::not_applicable;
  std::string detail;
};

struct OddK4LemmaResult {
  ClaimVerdict claim1, claim2, claim3;
  std::optional<Vertex> offending_vertex;
};

/// Claims about a balanced subdivision H of a member of G_ℓ, in the labeling stored on H:
/// (1) |P1| ≤ ℓ and some arris among Q1, Q2, L1, L2 is a single edge; (2) |P2| ≥ ℓ;
/// (3) with no odd K4-subdivision in G, |Q1| = 1 and |L2| ≥ 2, no vertex outside H has two
/// neighbours in H.
inline OddK4LemmaResult lemma_odd_k4_check(const Host& host, const K4Subdivision& h, Budget budget = {}) {
  if (h.kind != K4Kind::balanced && h.kind != K4Kind::balanced_type_1_2)
    throw InputError("subdivision is not balanced");
  if (!h.labeling) throw InputError("balanced subdivision lacks a labeling");
  OddK4LemmaResult r;
  if (!host.admits_lemmas()) {
    r.claim1.detail = r.claim2.detail = r.claim3.detail = "host is not a member";
    return r;
  }
  const Graph& g = host.graph();
  const auto ell = static_cast<std::size_t>(host.ell());
  const auto len = h.lengths();
  const auto& L = *h.labeling;
  bool unit = len[L.q1] == 1 || len[L.q2] == 1 || len[L.l1] == 1 || len[L.l2] == 1;
  bool c1 = len[L.p1] <= ell && unit;
  r.claim1.verdict = c1 ? Verdict::consistent : Verdict::violation;
  r.claim1.detail = "|P1|=" + std::to_string(len[L.p1]) + (unit ? ", unit arris present" : ", no unit arris");
  r.claim2.verdict = len[L.p2] >= ell ? Verdict::consistent : Verdict::violation;
  r.claim2.detail = "|P2|=" + std::to_string(len[L.p2]);

  if (!(len[L.q1] == 1 && len[L.l2] >= 2)) {
    r.claim3.detail = "labeling does not have |Q1|=1 and |L2|>=2";
    return r;
  }
  auto odd = find_odd_k4(g, budget);
  if (odd.found) {
    r.claim3.detail = "host has an odd K4-subdivision";
    return r;
  }
  if (odd.status == SearchStatus::budget_exceeded) {
    r.claim3.verdict = Verdict::unknown;
    r.claim3.detail = "odd K4-subdivision search exceeded its budget";
    return r;
  }
  VertexSet hv = h.vertex_set();
  r.claim3.verdict = Verdict::consistent;
  r.claim3.detail = "no outside vertex has two neighbours in H";
  for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) {
    if (hv.contains(v)) continue;
    if ((g.neighborhood(v) & hv).size() >= 2) {
      r.claim3.verdict = Verdict::violation;
      r.claim3.detail = "vertex " + std::to_string(v) + " has two neighbours in H";
      r.offending_vertex = v;
      break;
    }
  }
  return r;
}

/// An induced (v1,v2)-path whose only contacts with h1 and h2 are v1 and v2 respectively,
/// computed in g minus `forbidden_edges`. When h1 and h2 are joined by an edge there is no
/// vertex to route through: `path` is empty and `linking_edge` records that edge.
struct DirectConnection {
  std::vector<Vertex> path;
  VertexSet h1, h2;
  std::vector<Edge> forbidden_edges;
  std::optional<Edge> linking_edge;
};

inline Check validate_direct_connection(const Graph& g, const DirectConnection& dc) {
  Graph gg = remove_edges(g, dc.forbidden_edges);
  if (dc.h1.intersects(dc.h2)) return Check::fail("h1 and h2 overlap");
  if (dc.path.empty()) {
    if (!dc.linking_edge) return Check::fail("empty connection without a linking edge");
    auto [a, b] = *dc.linking_edge;
    bool ok = gg.contains(a) && gg.contains(b) && gg.adjacent(a, b) &&
              ((dc.h1.contains(a) && dc.h2.contains(b)) || (dc.h1.contains(b) && dc.h2.contains(a)));
    return ok ? Check::pass() : Check::fail("linking edge does not join h1 and h2");
  }
  if (auto c = check_path(gg, dc.path, true); !c) return Check::fail("path: " + std::string(to_string(c.defect)));
  VertexSet pv = VertexSet::of(dc.path);
  if (pv.intersects(dc.h1 | dc.h2)) return Check::fail("path meets h1 or h2");
  for (std::size_t i = 0; i < dc.path.size(); ++i) {
    Vertex v = dc.path[i];
    bool t1 = gg.neighborhood(v).intersects(dc.h1);
    bool t2 = gg.neighborhood(v).intersects(dc.h2);
    if (t1 != (i == 0)) return Check::fail("wrong contact with h1 at position " + std::to_string(i));
    if (t2 != (i + 1 == dc.path.size())) return Check::fail("wrong contact with h2 at position " + std::to_string(i));
  }
  return Check::pass();
}

/// A shortest direct connection, or nullopt when h1 and h2 are not linked in g minus forbidden_edges.
inline std::optional<DirectConnection> find_direct_connection(const Graph& g, const VertexSet& h1, const VertexSet& h2,
                                                              std::vector<Edge> forbidden_edges = {}) {
  if (h1.empty() || h2.empty()) throw InputError("h1 and h2 must be nonempty");
  if (h1.intersects(h2)) throw InputError("h1 and h2 overlap");
  check_vertices(g, h1.to_vector());
  check_vertices(g, h2.to_vector());
  for (auto& e : forbidden_edges) e = make_edge(e.first, e.second);
  std::sort(forbidden_edges.begin(), forbidden_edges.end());
  Graph gg = remove_edges(g, forbidden_edges);
  DirectConnection dc{{}, h1, h2, forbidden_edges, std::nullopt};

  std::optional<Edge> link;
  h1.for_each([&](Vertex v) {
    if (link) return;
    if (auto w = (gg.neighborhood(v) & h2).first()) link = make_edge(v, *w);
  });
  if (link) {
    dc.linking_edge = link;
    return dc;
  }
  const VertexSet outside = gg.vertex_set() - h1 - h2;
  const VertexSet s1 = neighbors_of_set(gg, h1) & outside;
  const VertexSet s2 = neighbors_of_set(gg, h2) & outside;
  std::vector<int> parent(g.num_vertices(), -2);
  std::deque<Vertex> q;
  s1.for_each([&](Vertex v) {
    parent[v] = -1;
    q.push_back(v);
  });
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    if (s2.contains(u)) {
      for (Vertex v = u; v != -1; v = parent[v]) dc.path.push_back(v);
      std::reverse(dc.path.begin(), dc.path.end());
      return dc;
    }
    (gg.neighborhood(u) & outside).for_each([&](Vertex w) {
      if (parent[w] != -2) return;
      parent[w] = u;
      q.push_back(w);
    });
  }
  return std::nullopt;
}

}  // namespace oddhole
