#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "oddhole/common.hpp"
#include "oddhole/graph.hpp"

namespace oddhole {

enum class ColoringStatus { exact, exceeds_max_k, budget_exceeded };

inline std::string_view to_string(ColoringStatus s) {
  switch (s) {
    case ColoringStatus::exact: return "exact";
    case ColoringStatus::exceeds_max_k: return "exceeds_max_k";
    case ColoringStatus::budget_exceeded: return "budget_exceeded";
  }
  return "exact";
}

enum class LowerBoundKind { none, vertex, edge, odd_cycle, clique, exhaustive };

inline std::string_view to_string(LowerBoundKind k) {
  switch (k) {
    case LowerBoundKind::none: return "none";
    case LowerBoundKind::vertex: return "vertex";
    case LowerBoundKind::edge: return "edge";
    case LowerBoundKind::odd_cycle: return "odd_cycle";
    case LowerBoundKind::clique: return "clique";
    case LowerBoundKind::exhaustive: return "exhaustive";
  }
  return "none";
}

/// Why fewer colours are impossible: a subgraph needing `value` colours, or a failed exhaustive
/// (value-1)-colouring search.
struct LowerBound {
  LowerBoundKind kind = LowerBoundKind::none;
  int value = 0;
  std::vector<Vertex> witness;
};

struct ColoringResult {
  ColoringStatus status = ColoringStatus::exact;
  /// Colours used when exact; the largest k ruled out otherwise.
  int k = 0;
  std::vector<int> assignment;
  LowerBound lower_bound;
  std::uint64_t nodes = 0;
};

/// Largest degree first; afterwards the vertex with most already-ordered neighbours, then
/// larger degree, then smaller id.
inline std::vector<Vertex> coloring_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> order;
  std::vector<int> placed_nbrs(n, 0);
  std::vector<bool> placed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      if (placed[v]) continue;
      if (best < 0 || placed_nbrs[v] > placed_nbrs[best] ||
          (placed_nbrs[v] == placed_nbrs[best] && g.degree(v) > g.degree(best)))
        best = v;
    }
    placed[best] = true;
    order.push_back(best);
    for (Vertex w : g.neighbors(best)) ++placed_nbrs[w];
  }
  return order;
}

/// A proper colouring with at most k colours, or nullopt. Check meter.exceeded() to tell
/// "none exists" from "search cut short".
inline std::optional<std::vector<int>> k_coloring(const Graph& g, int k, BudgetMeter& meter) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return std::vector<int>{};
  if (k <= 0) return std::nullopt;
  auto order = coloring_order(g);
  std::vector<int> colour(n, -1);
  bool aborted = false;
  auto rec = [&](auto&& self, std::size_t i, int used) -> bool {
    if (i == n) return true;
    if (!meter.tick()) {
      aborted = true;
      return false;
    }
    Vertex v = order[i];
    std::uint32_t banned = 0;
    for (Vertex w : g.neighbors(v))
      if (colour[w] >= 0) banned |= 1u << colour[w];
    // Colours above used+1 are interchangeable with used+1.
    int top = std::min(k - 1, used);
    for (int c = 0; c <= top; ++c) {
      if (banned & (1u << c)) continue;
      colour[v] = c;
      if (self(self, i + 1, std::max(used, c + 1))) return true;
      if (aborted) return false;
    }
    colour[v] = -1;
    return false;
  };
  if (rec(rec, 0, 0)) return colour;
  return std::nullopt;
}

/// An odd cycle of g, or empty when g is bipartite.
inline std::vector<Vertex> find_odd_cycle(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> depth(n, -1);
  std::vector<Vertex> parent(n, -1);
  for (Vertex r = 0; r < static_cast<Vertex>(n); ++r) {
    if (depth[r] >= 0) continue;
    depth[r] = 0;
    std::deque<Vertex> q{r};
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (depth[w] < 0) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          q.push_back(w);
        } else if (depth[w] == depth[u]) {
          std::vector<Vertex> a{u}, b{w};
          while (a.back() != b.back()) {
            a.push_back(parent[a.back()]);
            b.push_back(parent[b.back()]);
          }
          b.pop_back();
          a.insert(a.end(), b.rbegin(), b.rend());
          return a;
        }
      }
    }
  }
  return {};
}

/// A maximum clique when its size is at most `cap`, otherwise some clique of size cap + 1.
inline std::vector<Vertex> max_clique(const Graph& g, std::size_t cap) {
  std::vector<Vertex> best, cur;
  auto rec = [&](auto&& self, VertexSet cand) -> void {
    if (best.size() > cap) return;
    if (cur.size() + cand.size() <= best.size()) return;
    auto f = cand.first();
    if (!f) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    Vertex v = *f;
    cand.erase(v);
    cur.push_back(v);
    self(self, cand & g.neighborhood(v));
    cur.pop_back();
    self(self, cand);
  };
  rec(rec, g.vertex_set());
  return best;
}

/// The strongest cheap lower bound: clique, odd cycle, edge, or vertex.
inline LowerBound structural_lower_bound(const Graph& g, int cap) {
  if (g.num_vertices() == 0) return {LowerBoundKind::none, 0, {}};
  auto clique = max_clique(g, static_cast<std::size_t>(std::max(cap, 1)));
  if (clique.size() >= 3) return {LowerBoundKind::clique, static_cast<int>(clique.size()), clique};
  if (auto odd = find_odd_cycle(g); !odd.empty()) return {LowerBoundKind::odd_cycle, 3, odd};
  if (clique.size() == 2) return {LowerBoundKind::edge, 2, clique};
  return {LowerBoundKind::vertex, 1, {0}};
}

/// Exact chromatic number when it is at most max_k (≤ 8 colours here).
inline ColoringResult chromatic_number(const Graph& g, int max_k = 8, Budget budget = {}) {
  if (max_k < 0 || max_k > 8) throw InputError("max_k must lie in [0, 8]");
  BudgetMeter meter(budget);
  ColoringResult r;
  LowerBound lb = structural_lower_bound(g, max_k);
  if (lb.value > max_k) {
    r.status = ColoringStatus::exceeds_max_k;
    r.k = max_k;
    r.lower_bound = lb;
    return r;
  }
  for (int k = lb.value; k <= max_k; ++k) {
    auto col = k_coloring(g, k, meter);
    if (meter.exceeded()) {
      r.status = ColoringStatus::budget_exceeded;
      r.k = k - 1;
      r.nodes = meter.used();
      return r;
    }
    if (col) {
      r.status = ColoringStatus::exact;
      r.k = k;
      r.assignment = std::move(*col);
      r.lower_bound = k == lb.value ? lb : LowerBound{LowerBoundKind::exhaustive, k, {}};
      r.nodes = meter.used();
      return r;
    }
  }
  r.status = ColoringStatus::exceeds_max_k;
  r.k = max_k;
  r.lower_bound = {LowerBoundKind::exhaustive, max_k + 1, {}};
  r.nodes = meter.used();
  return r;
}

struct CriticalityResult {
  /// Decided unless a search ran out of budget.
  bool decided = true;
  bool critical = false;
  ColoringResult chromatic;
  /// For each vertex v, a (k-1)-colouring of G - v (v itself gets -1); filled when critical.
  std::vector<std::vector<int>> vertex_colorings;
  std::optional<Vertex> failing_vertex;
  std::string reason;
};

inline CriticalityResult is_k_vertex_critical(const Graph& g, int k, Budget budget = {}) {
  if (k < 1 || k > 8) throw InputError("k must lie in [1, 8]");
  CriticalityResult r;
  r.chromatic = chromatic_number(g, k, budget);
  if (r.chromatic.status == ColoringStatus::budget_exceeded) {
    r.decided = false;
    r.reason = "chromatic number search exceeded its budget";
    return r;
  }
  if (r.chromatic.status != ColoringStatus::exact || r.chromatic.k != k) {
    r.reason = r.chromatic.status == ColoringStatus::exact ? "chromatic number is " + std::to_string(r.chromatic.k)
                                                           : "chromatic number exceeds " + std::to_string(k);
    return r;
  }
  for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v) {
    VertexSet keep = g.vertex_set();
    keep.erase(v);
    auto sub = induced_subgraph(g, keep);
    BudgetMeter meter(budget);
    auto col = k_coloring(sub.graph, k - 1, meter);
    if (meter.exceeded()) {
      r.decided = false;
      r.reason = "colouring G - " + std::to_string(v) + " exceeded its budget";
      return r;
    }
    if (!col) {
      r.failing_vertex = v;
      r.reason = "G - " + std::to_string(v) + " still needs " + std::to_string(k) + " colours";
      r.vertex_colorings.clear();
      return r;
    }
    std::vector<int> full(g.num_vertices(), -1);
    for (std::size_t i = 0; i < col->size(); ++i) full[sub.to_original[i]] = (*col)[i];
    r.vertex_colorings.push_back(std::move(full));
  }
  r.critical = true;
  r.reason = "every vertex-deleted subgraph is " + std::to_string(k - 1) + "-colourable";
  return r;
}

}  // namespace oddhole
