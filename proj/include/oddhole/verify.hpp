#pragma once

#include <set>
#include <string>
#include <vector>

#include "oddhole/coloring.hpp"
#include "oddhole/cuts.hpp"
#include "oddhole/decompose.hpp"
#include "oddhole/k4.hpp"

namespace oddhole {

/// Definitional re-checks of every certificate kind, built on adjacency queries only.
/// The exhaustive lower bound is re-checked with a separate plain backtracker.
namespace verify_detail {

inline bool all_in_range(const Graph& g, const std::vector<Vertex>& vs) {
  for (Vertex v : vs)
    if (!g.contains(v)) return false;
  return true;
}

inline bool distinct(const std::vector<Vertex>& vs) { return std::set<Vertex>(vs.begin(), vs.end()).size() == vs.size(); }

/// Vertex order 0..n-1, every colour tried at every vertex. Returns true when a colouring exists,
/// false when none does; sets `exceeded` when the node cap is hit.
inline bool plain_colourable(const Graph& g, int k, std::uint64_t cap, bool& exceeded) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::uint64_t nodes = 0;
  exceeded = false;
  auto rec = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    if (++nodes > cap) {
      exceeded = true;
      return false;
    }
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (Vertex w : g.neighbors(v))
        if (colour[w] == c) ok = false;
      if (!ok) continue;
      colour[v] = c;
      if (self(self, v + 1)) return true;
      if (exceeded) return false;
      colour[v] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Checks the cut against the vertices of `scope`, which must induce a connected graph.
inline Check cut_within(const Graph& g, const CutCertificate& c, const VertexSet& scope) {
  VertexSet removed;
  std::vector<Edge> dropped;
  switch (c.kind) {
    case CutKind::two_edge_cut: {
      if (c.edges.size() != 2) return Check::fail("a 2-edge-cut has exactly two edges");
      if (make_edge(c.edges[0].first, c.edges[0].second) == make_edge(c.edges[1].first, c.edges[1].second))
        return Check::fail("the two edges coincide");
      for (const auto& [u, v] : c.edges) {
        if (!g.contains(u) || !g.contains(v) || !g.adjacent(u, v)) return Check::fail("cut edge is not an edge");
        if (!scope.contains(u)) return Check::fail("cut edge lies outside the scope");
        dropped.push_back(make_edge(u, v));
      }
      break;
    }
    case CutKind::k2_cut:
    case CutKind::p3_cut: {
      const std::size_t want = c.kind == CutKind::k2_cut ? 2 : 3;
      if (c.path.size() != want) return Check::fail("path has " + std::to_string(c.path.size()) + " vertices");
      if (!all_in_range(g, c.path) || !distinct(c.path)) return Check::fail("path vertices are invalid");
      for (std::size_t i = 0; i + 1 < c.path.size(); ++i)
        if (!g.adjacent(c.path[i], c.path[i + 1])) return Check::fail("consecutive path vertices are not adjacent");
      removed = VertexSet::of(c.path);
      if (!removed.is_subset_of(scope)) return Check::fail("path leaves the scope");
      break;
    }
  }
  if (c.side_a.empty() || c.side_b.empty()) return Check::fail("a side is empty");
  if (!all_in_range(g, c.side_a) || !all_in_range(g, c.side_b) || !distinct(c.side_a) || !distinct(c.side_b))
    return Check::fail("side vertices are invalid");
  VertexSet a = VertexSet::of(c.side_a), b = VertexSet::of(c.side_b);
  if (a.intersects(b)) return Check::fail("sides overlap");
  if ((a | b) != scope - removed) return Check::fail("sides do not cover the surviving vertices");
  auto crosses = [&](Vertex u, Vertex v) {
    return std::find(dropped.begin(), dropped.end(), make_edge(u, v)) == dropped.end();
  };
  for (Vertex u : c.side_a)
    for (Vertex v : g.neighbors(u))
      if (b.contains(v) && crosses(u, v))
        return Check::fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " joins the sides");
  return Check::pass();
}

inline Check lower_bound_holds(const Graph& g, const LowerBound& lb, std::uint64_t cap) {
  const auto& w = lb.witness;
  switch (lb.kind) {
    case LowerBoundKind::none:
      return lb.value == 0 ? Check::pass() : Check::fail("an empty bound only supports 0 colours");
    case LowerBoundKind::vertex:
      if (lb.value != 1 || g.num_vertices() == 0) return Check::fail("vertex bound must be 1 on a nonempty graph");
      return Check::pass();
    case LowerBoundKind::edge:
      if (lb.value != 2 || w.size() != 2 || !all_in_range(g, w) || w[0] == w[1] || !g.adjacent(w[0], w[1]))
        return Check::fail("edge witness is not an edge");
      return Check::pass();
    case LowerBoundKind::odd_cycle:
      if (lb.value != 3 || w.size() % 2 == 0 || w.size() < 3 || !all_in_range(g, w) || !distinct(w))
        return Check::fail("odd cycle witness is malformed");
      for (std::size_t i = 0; i < w.size(); ++i)
        if (!g.adjacent(w[i], w[(i + 1) % w.size()])) return Check::fail("odd cycle witness is not a cycle");
      return Check::pass();
    case LowerBoundKind::clique:
      if (static_cast<std::size_t>(lb.value) != w.size() || !all_in_range(g, w) || !distinct(w))
        return Check::fail("clique witness is malformed");
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
          if (!g.adjacent(w[i], w[j])) return Check::fail("clique witness is not a clique");
      return Check::pass();
    case LowerBoundKind::exhaustive: {
      if (lb.value < 1) return Check::fail("exhaustive bound must be positive");
      bool exceeded = false;
      bool colourable = plain_colourable(g, lb.value - 1, cap, exceeded);
      if (exceeded) return Check::fail("re-check of the exhaustive bound exceeded its node cap");
      if (colourable) return Check::fail("graph is " + std::to_string(lb.value - 1) + "-colourable");
      return Check::pass();
    }
  }
  return Check::fail("unknown bound kind");
}

}  // namespace verify_detail

/// Node cap for re-checking exhaustive colouring bounds.
inline constexpr std::uint64_t kVerifyColouringCap = 200'000'000;

/// A cut of the whole (connected) graph.
inline Check verify_certificate(const Graph& g, const CutCertificate& c) {
  if (!is_connected(g)) return Check::fail("graph is disconnected");
  return verify_detail::cut_within(g, c, g.vertex_set());
}

/// Exact results need a proper colouring with k colours and a bound of k; exceeds_max_k results
/// need a bound above k. Budget-exceeded results certify nothing.
inline Check verify_certificate(const Graph& g, const ColoringResult& r) {
  if (r.status == ColoringStatus::budget_exceeded) return Check::fail("result carries no certificate");
  if (r.status == ColoringStatus::exceeds_max_k) {
    if (r.lower_bound.value <= r.k) return Check::fail("bound does not exceed max_k");
    return verify_detail::lower_bound_holds(g, r.lower_bound, kVerifyColouringCap);
  }
  const std::size_t n = g.num_vertices();
  if (r.assignment.size() != n) return Check::fail("assignment size differs from vertex count");
  std::set<int> used;
  for (std::size_t v = 0; v < n; ++v) {
    if (r.assignment[v] < 0 || r.assignment[v] >= r.k) return Check::fail("colour out of range");
    used.insert(r.assignment[v]);
  }
  if (static_cast<int>(used.size()) != r.k) return Check::fail("assignment uses " + std::to_string(used.size()) + " colours");
  for (const auto& [u, v] : g.edges())
    if (r.assignment[u] == r.assignment[v])
      return Check::fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " is monochromatic");
  if (r.lower_bound.value != r.k) return Check::fail("lower bound does not match k");
  return verify_detail::lower_bound_holds(g, r.lower_bound, kVerifyColouringCap);
}

inline Check verify_certificate(const Graph& g, const K4Subdivision& h) { return validate_k4(g, h); }

/// Critical results need the chromatic certificate and a proper (k-1)-colouring of every G - v.
/// Non-critical results with a failing vertex are re-checked by exhaustive search on G - v.
inline Check verify_certificate(const Graph& g, const CriticalityResult& r, int k) {
  if (!r.decided) return Check::fail("result is undecided");
  if (!r.critical) {
    if (r.chromatic.status == ColoringStatus::exact && r.chromatic.k != k) return verify_certificate(g, r.chromatic);
    if (r.chromatic.status == ColoringStatus::exceeds_max_k) return verify_certificate(g, r.chromatic);
    if (!r.failing_vertex || !g.contains(*r.failing_vertex)) return Check::fail("no failing vertex recorded");
    if (auto c = verify_certificate(g, r.chromatic); !c) return c;
    VertexSet keep = g.vertex_set();
    keep.erase(*r.failing_vertex);
    auto sub = induced_subgraph(g, keep);
    bool exceeded = false;
    bool colourable = verify_detail::plain_colourable(sub.graph, k - 1, kVerifyColouringCap, exceeded);
    if (exceeded) return Check::fail("re-check exceeded its node cap");
    if (colourable) return Check::fail("G - failing vertex is colourable after all");
    return Check::pass();
  }
  if (r.chromatic.status != ColoringStatus::exact || r.chromatic.k != k) return Check::fail("chromatic number is not k");
  if (auto c = verify_certificate(g, r.chromatic); !c) return c;
  const std::size_t n = g.num_vertices();
  if (r.vertex_colorings.size() != n) return Check::fail("missing vertex-deleted colourings");
  for (std::size_t v = 0; v < n; ++v) {
    const auto& col = r.vertex_colorings[v];
    if (col.size() != n || col[v] != -1) return Check::fail("colouring of G - " + std::to_string(v) + " is malformed");
    for (std::size_t u = 0; u < n; ++u)
      if (u != v && (col[u] < 0 || col[u] >= k - 1)) return Check::fail("colour out of range in G - " + std::to_string(v));
    for (const auto& [a, b] : g.edges())
      if (a != static_cast<Vertex>(v) && b != static_cast<Vertex>(v) && col[a] == col[b])
        return Check::fail("colouring of G - " + std::to_string(v) + " is improper");
  }
  return Check::pass();
}

/// The payload must match the outcome and validate; cuts are checked inside `scope`, which must
/// be a connected component of g.
inline Check verify_certificate(const Graph& g, const DecomposeCertificate& c) {
  switch (c.outcome) {
    case DecomposeOutcome::degree2_vertex:
      if (!c.degree2 || !g.contains(*c.degree2)) return Check::fail("no vertex recorded");
      if (g.degree(*c.degree2) != 2) return Check::fail("vertex does not have degree 2");
      return Check::pass();
    case DecomposeOutcome::p3_cut: {
      if (!c.cut || c.cut->kind != CutKind::p3_cut) return Check::fail("no P3-cut recorded");
      if (c.scope.empty() || !verify_detail::all_in_range(g, c.scope) || !verify_detail::distinct(c.scope))
        return Check::fail("scope is invalid");
      VertexSet scope = VertexSet::of(c.scope);
      if (!neighbors_of_set(g, scope).empty() || !is_connected(g, scope))
        return Check::fail("scope is not a component");
      return verify_detail::cut_within(g, *c.cut, scope);
    }
    case DecomposeOutcome::odd_k4:
    case DecomposeOutcome::balanced_type_1_2: {
      if (!c.k4) return Check::fail("no subdivision recorded");
      K4Kind want = c.outcome == DecomposeOutcome::odd_k4 ? K4Kind::odd : K4Kind::balanced_type_1_2;
      if (c.k4->kind != want) return Check::fail("subdivision kind does not match the outcome");
      return validate_k4(g, *c.k4);
    }
  }
  return Check::fail("unknown outcome");
}

}  // namespace oddhole
