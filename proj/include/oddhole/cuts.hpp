#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddhole/common.hpp"
#include "oddhole/graph.hpp"

namespace oddhole {

enum class CutKind { two_edge_cut, k2_cut, p3_cut };

inline std::string_view to_string(CutKind k) {
  switch (k) {
    case CutKind::two_edge_cut: return "two_edge_cut";
    case CutKind::k2_cut: return "k2_cut";
    case CutKind::p3_cut: return "p3_cut";
  }
  return "two_edge_cut";
}

/// `edges` for two_edge_cut, `path` for the path cuts. side_a holds the component of the least
/// surviving vertex, side_b everything else that survives.
struct CutCertificate {
  CutKind kind = CutKind::two_edge_cut;
  std::vector<Edge> edges;
  std::vector<Vertex> path;
  std::vector<Vertex> side_a, side_b;
};

namespace detail {

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw InputError("graph must be connected");
}

/// Splits the survivors when they fall apart.
inline bool split(const Graph& g, const VertexSet& alive, CutCertificate& c) {
  auto comps = components(g, alive);
  if (comps.size() < 2) return false;
  c.side_a = comps[0];
  c.side_b.clear();
  for (std::size_t i = 1; i < comps.size(); ++i) c.side_b.insert(c.side_b.end(), comps[i].begin(), comps[i].end());
  std::sort(c.side_b.begin(), c.side_b.end());
  return true;
}

}  // namespace detail

/// The lexicographically least pair of edges whose removal disconnects g. Bridges count.
inline std::optional<CutCertificate> find_two_edge_cut(const Graph& g) {
  detail::require_connected(g);
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      std::array<Edge, 2> drop{es[i], es[j]};
      Graph h = remove_edges(g, drop);
      CutCertificate c;
      c.kind = CutKind::two_edge_cut;
      c.edges = {es[i], es[j]};
      if (detail::split(h, h.vertex_set(), c)) return c;
    }
  return std::nullopt;
}

/// The least i-vertex path (i ∈ {2, 3}) whose removal disconnects g. Paths are ordered by their
/// vertex sequence written with first end < last end.
inline std::optional<CutCertificate> find_path_cut(const Graph& g, int i) {
  if (i != 2 && i != 3) throw InputError("path cuts are defined here for 2 or 3 vertices");
  detail::require_connected(g);
  const auto n = static_cast<Vertex>(g.num_vertices());
  auto attempt = [&](std::vector<Vertex> p) -> std::optional<CutCertificate> {
    CutCertificate c;
    c.kind = i == 2 ? CutKind::k2_cut : CutKind::p3_cut;
    VertexSet alive = g.vertex_set() - VertexSet::of(p);
    c.path = std::move(p);
    if (detail::split(g, alive, c)) return c;
    return std::nullopt;
  };
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y : g.neighbors(x)) {
      if (i == 2) {
        if (y > x)
          if (auto c = attempt({x, y})) return c;
        continue;
      }
      for (Vertex z : g.neighbors(y))
        if (z > x)
          if (auto c = attempt({x, y, z})) return c;
    }
  return std::nullopt;
}

inline std::vector<Vertex> degree_two_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(g.num_vertices()); ++v)
    if (g.degree(v) == 2) out.push_back(v);
  return out;
}

}  // namespace oddhole
